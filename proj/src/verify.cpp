#include "qdilog/verify.hpp"

#include "qdilog/errors.hpp"

#include <algorithm>
#include <random>

namespace qdilog {

namespace {

Verdict make_verdict(std::string identity, int n, int nprime, DimVector box, int hi) {
    Verdict v;
    v.identity = std::move(identity);
    v.n = n;
    v.nprime = nprime;
    v.box = std::move(box);
    v.window = hi;
    v.certified_window = hi;
    return v;
}

// Records the first difference between two products; returns false on mismatch.
bool record(Verdict& v, const AlgebraElement& a, const AlgebraElement& b, const std::string& what) {
    int upto = std::min({v.window, a.certified_window(), b.certified_window()});
    v.certified_window = std::min(v.certified_window, upto);
    if (auto d = first_difference(a, b, upto)) {
        v.pass = false;
        v.counterexample = Counterexample{d->gamma, d->diff.exponent, d->diff.left, d->diff.right};
        v.detail = what;
        return false;
    }
    return true;
}

bool record(Verdict& v, const DimVector& gamma, const QSeries& a, const QSeries& b, const std::string& what) {
    int upto = std::min({v.window, a.hi(), b.hi()});
    v.certified_window = std::min(v.certified_window, upto);
    if (auto d = first_difference(a, b, upto)) {
        v.pass = false;
        v.counterexample = Counterexample{gamma, d->exponent, d->left, d->right};
        v.detail = what;
        return false;
    }
    return true;
}

std::string describe(const RootOrder& o) {
    std::string s;
    for (const GridRoot& r : o.sequence) {
        if (!s.empty()) s += ' ';
        s += std::to_string(r.line) + ":" + std::to_string(r.k) + "-" + std::to_string(r.l);
    }
    return s;
}

}  // namespace

Verdict compare_products(const std::string& identity, const Quiver& q, const std::vector<DimVector>& left,
                         const std::vector<DimVector>& right, const DimVector& box, int hi) {
    Verdict out = make_verdict(identity, 0, 0, box, hi);
    record(out, ordered_dilog_product(q, left, box, hi), ordered_dilog_product(q, right, box, hi), "algebra form");
    return out;
}

Verdict compare_orders(const GridQuiver& gq, const RootOrder& h, const RootOrder& v, const DimVector& box, int hi) {
    Verdict out = make_verdict("theorem-mt", gq.n(), gq.nprime(), box, hi);
    record(out, ordered_dilog_product(gq, h, box, hi), ordered_dilog_product(gq, v, box, hi),
           "horizontal [" + describe(h) + "] vs vertical [" + describe(v) + "]");
    return out;
}

Verdict check_theorem_mt(int n, int nprime, const DimVector& box, int hi, const MtOptions& opt) {
    GridQuiver gq(n, nprime);
    if (box.size() != gq.vertex_count()) throw DimensionMismatch(box.size(), gq.vertex_count());
    Verdict out = make_verdict("theorem-mt", n, nprime, box, hi);
    RootOrder ch = canonical_order(gq, Axis::Horizontal);
    RootOrder cv = canonical_order(gq, Axis::Vertical);
    AlgebraElement lhs = ordered_dilog_product(gq, ch, box, hi);
    AlgebraElement rhs = ordered_dilog_product(gq, cv, box, hi);
    if (!record(out, lhs, rhs, "canonical orders")) return out;

    std::mt19937_64 rng(opt.seed);
    for (int r = 0; r < opt.random_orders; ++r) {
        RootOrder h = random_valid_order(gq, Axis::Horizontal, rng);
        if (!record(out, ordered_dilog_product(gq, h, box, hi), rhs, "random horizontal [" + describe(h) + "]"))
            return out;
        RootOrder v = random_valid_order(gq, Axis::Vertical, rng);
        if (!record(out, lhs, ordered_dilog_product(gq, v, box, hi), "random vertical [" + describe(v) + "]"))
            return out;
    }
    return out;
}

Quiver pentagon_quiver() { return Quiver(2, {{1, 0}}); }

Verdict check_pentagon_scalar(int a_max, int b_max, int hi) {
    DimVector box(2);
    box << a_max, b_max;
    Verdict out = make_verdict("pentagon-series", 0, 0, box, hi);
    std::vector<QSeries> P;
    for (int j = 0; j <= std::max(a_max, b_max); ++j) P.push_back(poincare_P(j, hi));
    for (int a = 0; a <= a_max; ++a)
        for (int b = 0; b <= b_max; ++b) {
            QSeries rhs = QSeries::zero(hi);
            for (int m11 = 0; m11 <= std::min(a, b); ++m11) {
                int m10 = a - m11, m01 = b - m11;
                rhs += shift(P[m10] * P[m01] * P[m11], 2 * m10 * m01).truncated(hi);
            }
            DimVector g(2);
            g << a, b;
            if (!record(out, g, P[a] * P[b], rhs, "series form")) return out;
        }
    return out;
}

Verdict check_pentagon(const DimVector& box, int hi) {
    if (box.size() != 2) throw DimensionMismatch(box.size(), 2);
    Quiver q = pentagon_quiver();
    DimVector e1 = q.simple(0), e2 = q.simple(1);
    Verdict out = compare_products("pentagon", q, {e1, e2}, {e2, e1 + e2, e1}, box, hi);
    if (!out.pass) return out;
    Verdict s = check_pentagon_scalar(box(0), box(1), hi);
    if (!s.pass) {
        s.identity = out.identity;
        return s;
    }
    return out;
}

QSeries keller_side(int a1, int a2, int b1, int b2, int hi) {
    QSeries total = QSeries::zero(hi);
    for (int m11 = 0; m11 <= std::min(a1, a2); ++m11)
        for (int n11 = 0; n11 <= std::min(b1, b2); ++n11) {
            int m10 = a1 - m11, m01 = a2 - m11, n10 = b1 - n11, n01 = b2 - n11;
            int e = m10 * m01 + n10 * n01 + m11 * n11;
            QSeries term = poincare_P(m10, hi) * poincare_P(m01, hi) * poincare_P(m11, hi) * poincare_P(n10, hi) *
                           poincare_P(n01, hi) * poincare_P(n11, hi);
            total += shift(term, 2 * e).truncated(hi);
        }
    return total;
}

Verdict check_55_keller(const DimVector& gamma, int hi) {
    if (gamma.size() != 4) throw DimensionMismatch(gamma.size(), 4);
    Verdict out = make_verdict("keller-55", 2, 2, gamma, hi);
    const int g1 = gamma(0), g2 = gamma(1), g3 = gamma(2), g4 = gamma(3);
    QSeries lhs = keller_side(g1, g2, g3, g4, hi);
    QSeries rhs = keller_side(g1, g3, g2, g4, hi);
    if (!record(out, gamma, lhs, rhs, "left vs right")) return out;
    GridQuiver s(2, 2);
    if (!record(out, gamma, lhs, geometric_sum(s, gamma, Axis::Horizontal, hi), "left vs horizontal strata"))
        return out;
    record(out, gamma, rhs, geometric_sum(s, gamma, Axis::Vertical, hi), "right vs vertical strata");
    return out;
}

std::vector<std::pair<DimVector, int>> vertex_powers(const GridQuiver& gq, const DimVector& gamma,
                                                     const std::vector<int>& vertices) {
    std::vector<std::pair<DimVector, int>> seq;
    for (int v : vertices) seq.emplace_back(gq.quiver().simple(v), gamma(v));
    return seq;
}

Monomial head_tail_monomial(const GridQuiver& gq, const DimVector& gamma) {
    auto seq = vertex_powers(gq, gamma, gq.hor_heads());
    auto tail = vertex_powers(gq, gamma, gq.hor_tails());
    seq.insert(seq.end(), tail.begin(), tail.end());
    return monomial_product_scalar(gq.quiver(), seq);
}

std::vector<std::pair<DimVector, int>> root_powers(const GridQuiver& gq, const RootOrder& ord, const Stratum& s) {
    std::vector<std::pair<DimVector, int>> seq;
    for (const GridRoot& r : ord.sequence) {
        const KostantPartition& kp = s.parts[static_cast<size_t>(r.line - 1)];
        seq.emplace_back(dim_vector(gq, r), kp.m(r.k, r.l));
    }
    return seq;
}

namespace {

bool equal_up_to(const Monomial& a, const Monomial& b, int sign, int tpow) {
    return a.gamma == b.gamma && a.sign == sign * b.sign && a.tpow == b.tpow + tpow;
}

std::vector<int> on_line(const GridQuiver& gq, const std::vector<int>& vs, Axis axis, int line) {
    std::vector<int> out;
    for (int v : vs) {
        auto [i, j] = gq.coord(v);
        if ((axis == Axis::Horizontal ? i : j) == line) out.push_back(v);
    }
    return out;
}

}  // namespace

bool row_codim_identity(const GridQuiver& gq, int row, const KostantPartition& kp) {
    if (kp.N != gq.nprime()) throw DimensionMismatch(kp.N, gq.nprime());
    DimVector gamma = gq.quiver().zero();
    DimVector d = kp.dimension();
    for (int x = 1; x <= kp.N; ++x) gamma(gq.id(row, x)) = d(x - 1);
    std::vector<std::pair<DimVector, int>> seq;
    for (const GridRoot& r : canonical_order(gq, Axis::Horizontal).sequence)
        if (r.line == row) seq.emplace_back(dim_vector(gq, r), kp.m(r.k, r.l));
    SiPi p = predict_si_pi(line_orientation(gq, Axis::Horizontal, row), kp);
    return equal_up_to(monomial_product_scalar(gq.quiver(), seq), head_tail_monomial(gq, gamma), p.s % 2 ? -1 : 1,
                       p.two_p);
}

bool head_tail_split(const GridQuiver& gq, const DimVector& gamma, Axis axis) {
    bool hor = axis == Axis::Horizontal;
    std::vector<int> heads = hor ? gq.hor_heads() : gq.ver_heads();
    std::vector<int> tails = hor ? gq.hor_tails() : gq.ver_tails();
    auto whole = vertex_powers(gq, gamma, heads);
    auto t = vertex_powers(gq, gamma, tails);
    whole.insert(whole.end(), t.begin(), t.end());
    std::vector<std::pair<DimVector, int>> split;
    for (int line = 1; line <= line_count(gq, axis); ++line) {
        auto h = vertex_powers(gq, gamma, on_line(gq, heads, axis, line));
        auto tl = vertex_powers(gq, gamma, on_line(gq, tails, axis, line));
        split.insert(split.end(), h.begin(), h.end());
        split.insert(split.end(), tl.begin(), tl.end());
    }
    QuadraticForms f = quadratic_forms(gq, gamma);
    int shift = static_cast<int>(2 * (hor ? f.up : f.left));
    return equal_up_to(monomial_product_scalar(gq.quiver(), split), monomial_product_scalar(gq.quiver(), whole), 1,
                       shift);
}

bool head_tail_switch(const GridQuiver& gq, const DimVector& gamma) {
    auto ver = vertex_powers(gq, gamma, gq.ver_heads());
    auto vt = vertex_powers(gq, gamma, gq.ver_tails());
    ver.insert(ver.end(), vt.begin(), vt.end());
    QuadraticForms f = quadratic_forms(gq, gamma);
    return equal_up_to(monomial_product_scalar(gq.quiver(), ver), head_tail_monomial(gq, gamma), 1,
                       static_cast<int>(2 * (f.vip - f.hip)));
}

ReorderingCheck::ReorderingCheck(const GridQuiver& gq, Axis axis) : gq_(gq), axis_(axis) {
    int lines = line_count(gq, axis);
    std::vector<Interval> lace = lace_order(line_length(gq, axis));
    lace_size_ = lace.size();
    auto lace_index = [&](int k, int l) {
        return static_cast<size_t>(std::find(lace.begin(), lace.end(), Interval{k, l}) - lace.begin());
    };
    for (const GridRoot& r : canonical_order(gq, axis).sequence) {
        DimVector beta = dim_vector(gq, r);
        slots_.push_back({r.line, lace_index(r.k, r.l), beta, gq.quiver().lambda_matrix() * beta});
    }
    for (int line = 1; line <= lines; ++line) {
        orient_.push_back(line_orientation(gq, axis, line));
        for (size_t i = 0; i < slots_.size(); ++i)
            if (slots_[i].line == line) by_line_.push_back(i);
    }
    for (int line = 1; line < lines; ++line) {
        std::vector<int> t(lace_size_ * lace_size_);
        for (size_t a = 0; a < lace_size_; ++a)
            for (size_t b = 0; b < lace_size_; ++b)
                t[a * lace_size_ + b] = sc(gq, GridRoot{axis, line, lace[a].k, lace[a].l},
                                           GridRoot{axis, line + 1, lace[b].k, lace[b].l});
        sc_.push_back(std::move(t));
    }
}

bool ReorderingCheck::operator()(const DimVector& gamma) const {
    if (gamma.size() != gq_.vertex_count()) throw DimensionMismatch(gamma.size(), gq_.vertex_count());
    size_t lines = orient_.size();
    std::vector<std::vector<KostantPartition>> parts;
    for (size_t i = 0; i < lines; ++i)
        parts.push_back(enumerate_kostant(orient_[i], line_dims(gq_, gamma, axis_, static_cast<int>(i) + 1)));
    QuadraticForms f = quadratic_forms(gq_, gamma);
    long base = axis_ == Axis::Horizontal ? f.down : f.right;

    MonomialAccumulator full(gq_.quiver()), by_line(gq_.quiver());
    std::vector<size_t> idx(lines, 0);
    std::vector<const std::vector<int>*> mult(lines);
    while (true) {
        for (size_t i = 0; i < lines; ++i) mult[i] = &parts[i][idx[i]].mult;
        full.reset();
        by_line.reset();
        for (const Slot& s : slots_) full.push(s.beta, s.lbeta, (*mult[static_cast<size_t>(s.line - 1)])[s.lace]);
        for (size_t k : by_line_) {
            const Slot& s = slots_[k];
            by_line.push(s.beta, s.lbeta, (*mult[static_cast<size_t>(s.line - 1)])[s.lace]);
        }
        long w = 0;
        for (size_t i = 0; i + 1 < lines; ++i)
            for (size_t a = 0; a < lace_size_; ++a) {
                int ma = (*mult[i])[a];
                if (!ma) continue;
                for (size_t b = 0; b < lace_size_; ++b) w += sc_[i][a * lace_size_ + b] * ma * (*mult[i + 1])[b];
            }
        if (full.sign() != by_line.sign() || full.tpow() != by_line.tpow() + 2 * (base + w) ||
            full.gamma() != by_line.gamma())
            return false;

        size_t i = 0;
        for (; i < lines; ++i) {
            if (++idx[i] < parts[i].size()) break;
            idx[i] = 0;
        }
        if (i == lines) return true;
    }
}

bool reordering_shift(const GridQuiver& gq, const DimVector& gamma, Axis axis) {
    return ReorderingCheck(gq, axis)(gamma);
}

QSeries predicted_coefficient(const GridQuiver& gq, const DimVector& gamma, Axis axis, int hi) {
    if (gamma.size() != gq.vertex_count()) throw DimensionMismatch(gamma.size(), gq.vertex_count());
    Monomial m = head_tail_monomial(gq, gamma);
    QuadraticForms f = quadratic_forms(gq, gamma);
    int e = static_cast<int>(-2 * f.hip) + gamma.squaredNorm() + m.tpow;
    int sign = (gamma.sum() % 2 == 0 ? 1 : -1) * m.sign;
    QSeries g = geometric_sum(gq, gamma, axis, hi - e);
    return shift(Int(sign) * g, e);
}

Verdict coefficient_crosscheck(const GridQuiver& gq, const DimVector& gamma, Axis axis, const DimVector& box,
                               int hi) {
    Verdict out = make_verdict("coefficient-" + to_string(axis), gq.n(), gq.nprime(), box, hi);
    AlgebraElement prod = ordered_dilog_product(gq, canonical_order(gq, axis), box, hi);
    if (!prod.contains(gamma)) throw BoxMismatch();
    record(out, gamma, prod.coeff(gamma), predicted_coefficient(gq, gamma, axis, hi), "strata prediction");
    return out;
}

AlgebraElement dt_invariant(int n, int nprime, const DimVector& box, int hi) {
    GridQuiver gq(n, nprime);
    AlgebraElement lhs = ordered_dilog_product(gq, canonical_order(gq, Axis::Horizontal), box, hi);
    AlgebraElement rhs = ordered_dilog_product(gq, canonical_order(gq, Axis::Vertical), box, hi);
    if (auto d = first_difference(lhs, rhs, hi))
        throw Error("horizontal and vertical products differ at t^" + std::to_string(d->diff.exponent));
    return lhs;
}

Int BettiTable::axis_total(Axis axis, int r) const {
    Int sum = 0;
    for (const BettiColumn& c : columns) {
        if (c.axis != axis) continue;
        int at = layout == BettiLayout::Figure ? r - c.codim : r;
        if (at >= 0 && at < static_cast<int>(c.cells.size())) sum += c.cells[static_cast<size_t>(at)];
    }
    return sum;
}

BettiTable betti_table(const GridQuiver& gq, const DimVector& gamma, int hi, BettiLayout layout) {
    BettiTable t;
    t.gamma = gamma;
    t.window = hi;
    t.layout = layout;
    t.degrees = hi / 2 + 1;
    for (Axis axis : {Axis::Horizontal, Axis::Vertical}) {
        int idx = 0;
        for (const StratumData& d : stratum_table(gq, gamma, axis)) {
            int lift = 2 * (d.w + (layout == BettiLayout::Shifted ? d.codim : 0));
            QSeries col = shift(poincare_stratum(d.stratum, hi), lift);
            BettiColumn c{axis, (axis == Axis::Horizontal ? "H" : "V") + std::to_string(++idx), d.codim, d.w, {}};
            for (int r = 0; r < t.degrees; ++r) c.cells.push_back(col.coeff(2 * r));
            t.columns.push_back(std::move(c));
        }
    }
    QSeries total = geometric_sum(gq, gamma, Axis::Horizontal, hi);
    for (int r = 0; r < t.degrees; ++r) t.total.push_back(total.coeff(2 * r));
    return t;
}

bool involution_term_matches(int j) {
    if (j < 0) throw Error("term index is non-negative");
    LaurentPoly ne = LaurentPoly::monomial(j % 2 == 0 ? 1 : -1, j * j);
    LaurentPoly nk = LaurentPoly::monomial(1, j * j);
    LaurentPoly de = LaurentPoly::monomial(1, 0), dk = LaurentPoly::monomial(1, 0);
    for (int k = 1; k <= j; ++k) de = de * (LaurentPoly::monomial(1, 0) - LaurentPoly::monomial(1, 2 * k));
    for (int i = 0; i < j; ++i) dk = dk * (LaurentPoly::monomial(1, 2 * j) - LaurentPoly::monomial(1, 2 * i));
    return involute(ne) * dk == nk * involute(de);
}

}  // namespace qdilog
