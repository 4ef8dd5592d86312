#include "qdilog/qalgebra.hpp"

#include "qdilog/errors.hpp"
#include "qdilog/parallel.hpp"

#include <algorithm>

namespace qdilog {

Monomial basis_product(const Quiver& q, const DimVector& g1, const DimVector& g2) {
    if (g1.isZero() || g2.isZero()) throw ZeroVectorOperand();
    return {g1 + g2, -1, lambda_form(q, g1, g2)};
}

Monomial monomial_mul(const Quiver& q, const Monomial& a, const Monomial& b) {
    if (a.gamma.isZero()) return {b.gamma, a.sign * b.sign, a.tpow + b.tpow};
    if (b.gamma.isZero()) return {a.gamma, a.sign * b.sign, a.tpow + b.tpow};
    Monomial m = basis_product(q, a.gamma, b.gamma);
    return {m.gamma, -a.sign * b.sign, m.tpow + a.tpow + b.tpow};
}

MonomialAccumulator::MonomialAccumulator(const Quiver& q) : q_(&q), gamma_(q.zero()) {}

void MonomialAccumulator::reset() {
    gamma_.setZero();
    sign_ = 1;
    tpow_ = 0;
    empty_ = true;
}

void MonomialAccumulator::push(const DimVector& g, int e) {
    if (g.size() != gamma_.size()) throw DimensionMismatch(g.size(), gamma_.size());
    push(g, q_->lambda_matrix() * g, e);
}

void MonomialAccumulator::push(const DimVector& g, const Eigen::VectorXi& lg, int e) {
    if (e < 0) throw Error("exponents are non-negative");
    if (e == 0 || g.isZero()) return;
    if (e % 2 == 0) sign_ = -sign_;
    if (!empty_) {
        sign_ = -sign_;
        tpow_ += e * gamma_.dot(lg);
    }
    gamma_ += e * g;
    empty_ = false;
}

Monomial monomial_product_scalar(const Quiver& q, const std::vector<std::pair<DimVector, int>>& seq) {
    MonomialAccumulator acc(q);
    for (const auto& [g, e] : seq) acc.push(g, e);
    return acc.value();
}

AlgebraElement::AlgebraElement(DimVector box) : box_(std::move(box)) {
    if ((box_.array() < 0).any()) throw Error("box entries are non-negative");
    size_t total = 1;
    for (long v = 0; v < box_.size(); ++v) {
        stride_.push_back(total);
        total *= static_cast<size_t>(box_(v)) + 1;
    }
    cells_.assign(total, QSeries());
}

AlgebraElement AlgebraElement::unit(const DimVector& box) {
    AlgebraElement a(box);
    a.cells_[0] = QSeries::one();
    return a;
}

AlgebraElement AlgebraElement::from_monomial(const DimVector& box, const Monomial& m) {
    AlgebraElement a(box);
    if (a.contains(m.gamma)) a.set(m.gamma, QSeries::monomial(m.sign, m.tpow));
    return a;
}

bool AlgebraElement::contains(const DimVector& g) const {
    return g.size() == box_.size() && (g.array() >= 0).all() && (g.array() <= box_.array()).all();
}

size_t AlgebraElement::index(const DimVector& g) const {
    if (!contains(g)) throw BoxMismatch();
    size_t idx = 0;
    for (long v = 0; v < g.size(); ++v) idx += stride_[static_cast<size_t>(v)] * static_cast<size_t>(g(v));
    return idx;
}

DimVector AlgebraElement::gamma(size_t idx) const {
    DimVector g(box_.size());
    for (long v = 0; v < box_.size(); ++v) {
        size_t radix = static_cast<size_t>(box_(v)) + 1;
        g(v) = static_cast<int>(idx % radix);
        idx /= radix;
    }
    return g;
}

int AlgebraElement::certified_window() const {
    int w = QSeries::kExact;
    for (const auto& c : cells_) w = std::min(w, c.hi());
    return w;
}

AlgebraElement AlgebraElement::truncated(int hi) const {
    AlgebraElement r = *this;
    for (auto& c : r.cells_) c = c.truncated(hi);
    return r;
}

AlgebraElement mul(const Quiver& q, const AlgebraElement& a, const AlgebraElement& b) {
    if (a.box() != b.box()) throw BoxMismatch();
    AlgebraElement r(a.box());
    const Eigen::MatrixXi& L = q.lambda_matrix();
    parallel_for(r.size(), [&](size_t out) {
        DimVector g = r.gamma(out);
        QSeries acc;
        // walk g1 over the sub-box below g
        DimVector g1 = DimVector::Zero(g.size());
        while (true) {
            const QSeries& x = a.coeff(g1);
            DimVector g2 = g - g1;
            const QSeries& y = b.coeff(g2);
            if (!(x.is_zero() && x.exact()) && !(y.is_zero() && y.exact())) {
                if (g1.isZero() || g2.isZero())
                    acc += x * y;
                else
                    acc -= shift(x * y, g1.dot(L * g2));
            }
            long v = 0;
            for (; v < g.size(); ++v) {
                if (g1(v) < g(v)) {
                    ++g1(v);
                    break;
                }
                g1(v) = 0;
            }
            if (v == g.size()) break;
        }
        r.at(out) = std::move(acc);
    });
    return r;
}

AlgebraElement power(const Quiver& q, const DimVector& beta, int j, const DimVector& box, int hi) {
    if (beta.isZero()) throw ZeroVectorOperand();
    AlgebraElement y = AlgebraElement::from_monomial(box, Monomial{beta, 1, 0});
    AlgebraElement acc = AlgebraElement::unit(box);
    for (int i = 0; i < j; ++i) acc = mul(q, acc, y);
    return acc.truncated(hi);
}

AlgebraElement dilog(const Quiver& q, const DimVector& beta, const DimVector& box, int hi) {
    if (beta.isZero()) throw ZeroVectorOperand();
    if (beta.size() != q.vertex_count()) throw DimensionMismatch(beta.size(), q.vertex_count());
    AlgebraElement e = AlgebraElement::unit(box);
    for (int j = 1; e.contains(j * beta); ++j)
        e.set(j * beta, -shift(poincare_P(j, hi - j * j), j * j));
    return e;
}

namespace {

// s / (1 - q^r), known through min(s.hi(), cap).
QSeries divide_one_minus_q(const QSeries& s, int r, int cap) {
    int hi = std::min(s.hi(), cap);
    if (s.is_zero() || s.lo() > hi) return QSeries::zero(hi);
    std::vector<Int> run(static_cast<size_t>(hi - s.lo() + 1));
    const auto& c = s.coeffs();
    std::copy(c.begin(), c.begin() + static_cast<long>(std::min(c.size(), run.size())), run.begin());
    divide_by_one_minus_q(run, r);
    return QSeries(s.lo(), hi, std::move(run));
}

}  // namespace

void multiply_by_dilog(const Quiver& q, AlgebraElement& a, const DimVector& beta, int cap) {
    if (beta.isZero()) throw ZeroVectorOperand();
    const DimVector& box = a.box();
    if (beta.size() != box.size()) throw DimensionMismatch(beta.size(), box.size());
    Eigen::VectorXi lbeta = q.lambda_matrix() * beta;

    // Cells split into chains g0, g0+beta, g0+2beta, ... with g0-beta outside
    // the box; a E(y_beta) only mixes cells within one chain.
    std::vector<size_t> starts;
    for (size_t idx = 0; idx < a.size(); ++idx) {
        DimVector g = a.gamma(idx);
        if (!a.contains(g - beta)) starts.push_back(idx);
    }

    parallel_for(starts.size(), [&](size_t c) {
        DimVector g0 = a.gamma(starts[c]);
        std::vector<size_t> cells;
        std::vector<int> lam;
        for (DimVector g = g0; a.contains(g); g += beta) {
            cells.push_back(a.index(g));
            lam.push_back(g.dot(lbeta));
        }
        std::vector<QSeries> x;
        for (size_t i : cells) x.push_back(a.at(i));
        bool zero_start = g0.isZero();
        for (size_t k = 0; k < cells.size(); ++k) {
            // new_k = x_k + sum_j P_j t^(j^2 + j lam_(k-j)) x_(k-j), nested as
            // D_1(T_1 + D_2(T_2 + ... D_k(T_k))) with D_r = 1/(1-q^r).
            QSeries acc;
            bool any = false;
            for (size_t j = k; j >= 1; --j) {
                size_t src = k - j;
                const QSeries& xs = x[src];
                if (!(xs.is_zero() && xs.exact())) {
                    int jj = static_cast<int>(j);
                    QSeries term = (zero_start && src == 0) ? -shift(xs, jj * jj)
                                                            : shift(xs, jj * jj + jj * lam[src]);
                    acc += term.truncated(cap);
                    any = true;
                }
                if (any) acc = divide_one_minus_q(acc, static_cast<int>(j), cap);
            }
            QSeries out = x[k];
            if (any) out += acc;
            a.at(cells[k]) = out.truncated(cap);
        }
    });
}

AlgebraElement ordered_dilog_product(const Quiver& q, const std::vector<DimVector>& betas, const DimVector& box,
                                     int hi) {
    int extra = 8;
    while (true) {
        AlgebraElement a = AlgebraElement::unit(box);
        for (const DimVector& b : betas) multiply_by_dilog(q, a, b, hi + extra);
        if (a.certified_window() >= hi) return a.truncated(hi);
        extra *= 2;
        if (extra > (1 << 16)) throw Error("could not certify the requested window");
    }
}

AlgebraElement ordered_dilog_product(const GridQuiver& gq, const RootOrder& ord, const DimVector& box, int hi) {
    OrderCheck chk = validate_order(gq, ord);
    if (!chk.ok) {
        auto [i, j] = *chk.violation;
        throw InvalidOrder("positions " + std::to_string(i) + " and " + std::to_string(j) + " are out of order");
    }
    std::vector<DimVector> betas;
    for (const GridRoot& r : ord.sequence) betas.push_back(dim_vector(gq, r));
    return ordered_dilog_product(gq.quiver(), betas, box, hi);
}

std::optional<ElementDifference> first_difference(const AlgebraElement& a, const AlgebraElement& b, int upto) {
    if (a.box() != b.box()) throw BoxMismatch();
    for (size_t i = 0; i < a.size(); ++i)
        if (auto d = first_difference(a.at(i), b.at(i), upto)) return ElementDifference{a.gamma(i), *d};
    return std::nullopt;
}

SiPi predict_si_pi(const LineOrientation& o, const KostantPartition& kp) {
    SiPi r;
    std::vector<Interval> ord = lace_order(o.size());
    int msq = 0;
    for (size_t i = 0; i < ord.size(); ++i) {
        r.s += kp.mult[i] * (ord[i].l - ord[i].k);
        msq += kp.mult[i] * kp.mult[i];
    }
    DimVector g = kp.dimension();
    r.two_p = 2 * codim_orbit(o, kp) + g.squaredNorm() - msq;
    return r;
}

}  // namespace qdilog
