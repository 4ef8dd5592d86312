#include "qdilog/roots.hpp"

#include "qdilog/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>

namespace qdilog {

std::string to_string(Axis axis) { return axis == Axis::Horizontal ? "horizontal" : "vertical"; }

Axis parse_axis(const std::string& s) {
    if (s == "horizontal" || s == "h" || s == "H") return Axis::Horizontal;
    if (s == "vertical" || s == "v" || s == "V") return Axis::Vertical;
    throw Error("unknown axis '" + s + "'");
}

int line_count(const GridQuiver& gq, Axis axis) { return axis == Axis::Horizontal ? gq.n() : gq.nprime(); }

int line_length(const GridQuiver& gq, Axis axis) { return axis == Axis::Horizontal ? gq.nprime() : gq.n(); }

int line_vertex(const GridQuiver& gq, Axis axis, int line, int x) {
    return axis == Axis::Horizontal ? gq.id(line, x) : gq.id(x, line);
}

DimVector dim_vector(const GridQuiver& gq, const GridRoot& r) {
    DimVector g = gq.quiver().zero();
    for (int x = r.k; x <= r.l; ++x) g(line_vertex(gq, r.axis, r.line, x)) = 1;
    return g;
}

std::vector<GridRoot> all_roots(const GridQuiver& gq, Axis axis) {
    std::vector<GridRoot> out;
    int len = line_length(gq, axis);
    for (int line = 1; line <= line_count(gq, axis); ++line)
        for (int k = 1; k <= len; ++k)
            for (int l = k; l <= len; ++l) out.push_back({axis, line, k, l});
    return out;
}

Overlap intersect(const GridRoot& r1, const GridRoot& r2) {
    if (r1.axis != r2.axis) throw AxisMismatch();
    int s = std::max(r1.k, r2.k), t = std::min(r1.l, r2.l);
    Overlap o;
    if (s <= t) {
        o.span = std::make_pair(s, t);
        o.delta = t - s;
    }
    return o;
}

bool first_vertex_is_sink(const GridQuiver&, Axis axis, int line) {
    return axis == Axis::Horizontal ? line % 2 == 1 : line % 2 == 0;
}

OrderMatrix order_matrix(const GridQuiver& gq, Axis axis, int line) {
    int len = line_length(gq, axis);
    int want = first_vertex_is_sink(gq, axis, line) ? 1 : 0;
    OrderMatrix m(static_cast<size_t>(len + 1), std::vector<std::optional<GridRoot>>(static_cast<size_t>(len)));
    for (int i = 1; i <= len + 1; ++i)
        for (int j = 1; j <= len; ++j) {
            if ((i + j) % 2 != want) continue;
            int u = j >= i ? j - i + 1 : i - j;
            int v = i + j <= len + 1 ? i + j - 1 : 2 * len + 2 - i - j;
            m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = GridRoot{axis, line, u, v};
        }
    return m;
}

OrderMatrix order_matrix(const GridQuiver& gq, int row) { return order_matrix(gq, Axis::Horizontal, row); }

int rho(const GridQuiver& gq, const GridRoot& r) {
    OrderMatrix m = order_matrix(gq, r.axis, r.line);
    for (size_t i = 0; i < m.size(); ++i)
        for (const auto& e : m[i])
            if (e && *e == r) return static_cast<int>(i) + 1;
    throw Error("root not found in its order matrix");
}

RootOrder canonical_order(const GridQuiver& gq, Axis axis) {
    std::vector<std::pair<int, GridRoot>> keyed;
    for (const GridRoot& r : all_roots(gq, axis)) keyed.emplace_back(rho(gq, r), r);
    std::sort(keyed.begin(), keyed.end());
    RootOrder ord{axis, {}};
    for (auto& [_, r] : keyed) ord.sequence.push_back(r);
    return ord;
}

namespace {

void require_permutation(const GridQuiver& gq, const RootOrder& ord) {
    std::vector<GridRoot> want = all_roots(gq, ord.axis);
    std::vector<GridRoot> got = ord.sequence;
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    if (want != got) throw IncompleteOrder("not a permutation of the " + to_string(ord.axis) + " roots");
}

// a must precede b.
bool precedes(const GridQuiver& gq, const GridRoot& a, const GridRoot& b, const DimVector& ga,
              const DimVector& gb) {
    int lam = lambda_form(gq.quiver(), ga, gb);
    return a.line == b.line ? lam > 0 : lam < 0;
}

}  // namespace

OrderCheck validate_order(const GridQuiver& gq, const RootOrder& ord) {
    require_permutation(gq, ord);
    std::vector<DimVector> g;
    for (const auto& r : ord.sequence) g.push_back(dim_vector(gq, r));
    for (size_t a = 0; a < g.size(); ++a)
        for (size_t b = a + 1; b < g.size(); ++b)
            if (precedes(gq, ord.sequence[b], ord.sequence[a], g[b], g[a])) return {false, std::make_pair(a, b)};
    return {};
}

RootOrder random_valid_order(const GridQuiver& gq, Axis axis, std::mt19937_64& rng) {
    std::vector<GridRoot> roots = all_roots(gq, axis);
    size_t n = roots.size();
    std::vector<DimVector> g;
    for (const auto& r : roots) g.push_back(dim_vector(gq, r));
    std::vector<std::vector<size_t>> succ(n);
    std::vector<int> indeg(n, 0);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            if (a != b && precedes(gq, roots[a], roots[b], g[a], g[b])) {
                succ[a].push_back(b);
                ++indeg[b];
            }
    std::vector<size_t> ready;
    for (size_t a = 0; a < n; ++a)
        if (indeg[a] == 0) ready.push_back(a);
    RootOrder ord{axis, {}};
    while (!ready.empty()) {
        std::uniform_int_distribution<size_t> pick(0, ready.size() - 1);
        size_t at = pick(rng);
        size_t a = ready[at];
        ready.erase(ready.begin() + static_cast<long>(at));
        ord.sequence.push_back(roots[a]);
        for (size_t b : succ[a])
            if (--indeg[b] == 0) ready.push_back(b);
    }
    if (ord.sequence.size() != n) throw Error("precedence relation has a cycle");
    return ord;
}

bool equivalent_orders(const GridQuiver& gq, const RootOrder& a, const RootOrder& b) {
    if (a.axis != b.axis) return false;
    require_permutation(gq, a);
    require_permutation(gq, b);
    std::map<GridRoot, size_t> pos;
    for (size_t i = 0; i < b.sequence.size(); ++i) pos[b.sequence[i]] = i;
    for (size_t i = 0; i < a.sequence.size(); ++i)
        for (size_t j = i + 1; j < a.sequence.size(); ++j) {
            const auto& x = a.sequence[i];
            const auto& y = a.sequence[j];
            if (lambda_form(gq.quiver(), dim_vector(gq, x), dim_vector(gq, y)) != 0 && pos[x] > pos[y]) return false;
        }
    return true;
}

UpDown up_down_counts(const GridQuiver& gq, const GridRoot& r1, const GridRoot& r2) {
    if (r1.axis != r2.axis) throw AxisMismatch();
    if (r1.line >= r2.line) throw Error("up/down counts need r1 on an earlier line");
    UpDown c;
    Overlap o = intersect(r1, r2);
    if (r2.line - r1.line != 1 || !o.span) return c;
    for (int x = o.span->first; x <= o.span->second; ++x) {
        int u = line_vertex(gq, r1.axis, r1.line, x);
        int d = line_vertex(gq, r1.axis, r2.line, x);
        if (gq.has_arrow(u, d))
            ++c.down;
        else
            ++c.up;
    }
    return c;
}

int sc(const GridQuiver& gq, const GridRoot& r1, const GridRoot& r2) {
    UpDown c = up_down_counts(gq, r1, r2);
    int lam = lambda_form(gq.quiver(), dim_vector(gq, r1), dim_vector(gq, r2));
    return lam <= 0 ? c.down : c.up;
}

int sc_restated(const GridQuiver& gq, const GridRoot& r1, const GridRoot& r2) {
    UpDown c = up_down_counts(gq, r1, r2);
    int lam = lambda_form(gq.quiver(), dim_vector(gq, r1), dim_vector(gq, r2));
    return lam <= 0 ? c.up + lam : c.up;
}

int r_floor(const GridRoot& r1, const GridRoot& r2) { return intersect(r1, r2).size() / 2; }

Signature tridiagonal_signature(int p) {
    if (p < 1) throw Error("signature needs p >= 1");
    return {p / 2, p / 2, p % 2};
}

Signature tridiagonal_signature_numeric(int p, double tol) {
    if (p < 1) throw Error("signature needs p >= 1");
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(p, p);
    for (int i = 0; i + 1 < p; ++i) h(i, i + 1) = h(i + 1, i) = 0.5;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
    Signature s;
    for (int i = 0; i < p; ++i) {
        double ev = es.eigenvalues()(i);
        if (ev > tol)
            ++s.pos;
        else if (ev < -tol)
            ++s.neg;
        else
            ++s.zero;
    }
    return s;
}

}  // namespace qdilog
