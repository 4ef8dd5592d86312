#include "qdilog/quiver.hpp"

#include "qdilog/errors.hpp"

namespace qdilog {

namespace {

void check_dim(const Quiver& q, const DimVector& g) {
    if (g.size() != q.vertex_count()) throw DimensionMismatch(g.size(), q.vertex_count());
}

}  // namespace

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
    euler_ = Eigen::MatrixXi::Identity(vertex_count_, vertex_count_);
    for (const Arrow& a : arrows_) {
        if (a.tail < 0 || a.tail >= vertex_count_ || a.head < 0 || a.head >= vertex_count_)
            throw Error("arrow endpoint out of range");
        euler_(a.tail, a.head) -= 1;
    }
    lambda_ = euler_.transpose() - euler_;
}

DimVector Quiver::simple(int v, int mult) const {
    DimVector g = zero();
    g(v) = mult;
    return g;
}

int euler_form(const Quiver& q, const DimVector& g1, const DimVector& g2) {
    check_dim(q, g1);
    check_dim(q, g2);
    return g1.dot(q.euler_matrix() * g2);
}

int lambda_form(const Quiver& q, const DimVector& g1, const DimVector& g2) {
    check_dim(q, g1);
    check_dim(q, g2);
    return g1.dot(q.lambda_matrix() * g2);
}

int tits_form(const Quiver& q, const DimVector& g) { return euler_form(q, g, g); }

bool is_root(const Quiver& q, const DimVector& g) {
    return (g.array() >= 0).all() && tits_form(q, g) == 1;
}

GridQuiver::GridQuiver(int n, int nprime) : n_(n), nprime_(nprime) {
    if (n < 1 || nprime < 1) throw Error("grid sides must be positive");
    std::vector<Arrow> arrows;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < nprime; ++j) {
            if ((i + j) % 2 == 0)
                arrows.push_back({id(i, j + 1), id(i, j)});
            else
                arrows.push_back({id(i, j), id(i, j + 1)});
        }
    for (int j = 1; j <= nprime; ++j)
        for (int i = 1; i < n; ++i) {
            if ((i + j) % 2 == 0)
                arrows.push_back({id(i, j), id(i + 1, j)});
            else
                arrows.push_back({id(i + 1, j), id(i, j)});
        }
    quiver_ = Quiver(n * nprime, std::move(arrows));
}

VertexClass GridQuiver::vertex_class(int v) const {
    auto [i, j] = coord(v);
    return (i + j) % 2 == 0 ? VertexClass::HorH : VertexClass::HorT;
}

std::vector<int> GridQuiver::hor_heads() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (vertex_class(v) == VertexClass::HorH) out.push_back(v);
    return out;
}

std::vector<int> GridQuiver::hor_tails() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (vertex_class(v) == VertexClass::HorT) out.push_back(v);
    return out;
}

bool GridQuiver::has_arrow(int tail, int head) const {
    for (const Arrow& a : quiver_.arrows())
        if (a.tail == tail && a.head == head) return true;
    return false;
}

GridQuiver square_product(int n, int nprime) { return GridQuiver(n, nprime); }

QuadraticForms quadratic_forms(const GridQuiver& gq, const DimVector& g) {
    check_dim(gq.quiver(), g);
    QuadraticForms f;
    for (const Arrow& a : gq.quiver().arrows()) {
        auto [ti, tj] = gq.coord(a.tail);
        auto [hi, hj] = gq.coord(a.head);
        long w = static_cast<long>(g(a.tail)) * g(a.head);
        if (hi < ti)
            f.up -= w;
        else if (hi > ti)
            f.down -= w;
        else if (hj < tj)
            f.left -= w;
        else
            f.right -= w;
    }
    f.hip = -f.up - f.down;
    f.vip = -f.left - f.right;
    return f;
}

}  // namespace qdilog
