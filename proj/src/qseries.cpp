#include "qdilog/qseries.hpp"

#include "qdilog/errors.hpp"

#include <algorithm>

namespace qdilog {

namespace {

int clamp_hi(long v) {
    if (v >= QSeries::kExact) return QSeries::kExact;
    return static_cast<int>(v);
}

}  // namespace

QSeries::QSeries(int lo, int hi, std::vector<Int> coeffs) : lo_(lo), hi_(clamp_hi(hi)), c_(std::move(coeffs)) {
    normalize();
}

void QSeries::normalize() {
    if (!exact()) {
        long keep = static_cast<long>(hi_) - lo_ + 1;
        if (keep < 0) keep = 0;
        if (static_cast<long>(c_.size()) > keep) c_.resize(static_cast<size_t>(keep));
    }
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        lo_ += static_cast<int>(lead);
    }
    if (c_.empty()) lo_ = exact() ? kExact : hi_ + 1;
}

QSeries QSeries::zero(int hi) { return QSeries(0, hi, {}); }

QSeries QSeries::one(int hi) { return monomial(1, 0, hi); }

QSeries QSeries::monomial(const Int& c, int k, int hi) { return QSeries(k, hi, {c}); }

Int QSeries::coeff(int k) const {
    if (k > hi_) throw Error("coefficient requested beyond the known window");
    if (k < lo_ || k > top()) return 0;
    return c_[static_cast<size_t>(k - lo_)];
}

QSeries QSeries::truncated(int hi) const {
    if (hi >= hi_) return *this;
    return QSeries(lo_, hi, c_);
}

QSeries& QSeries::operator+=(const QSeries& b) {
    int hi = std::min(hi_, b.hi_);
    if (b.is_zero()) {
        if (hi < hi_) *this = truncated(hi);
        return *this;
    }
    if (is_zero()) {
        *this = b.truncated(hi);
        return *this;
    }
    int lo = std::min(lo_, b.lo_);
    int top_ = std::min(std::max(top(), b.top()), hi);
    if (top_ < lo) {
        *this = zero(hi);
        return *this;
    }
    std::vector<Int> c(static_cast<size_t>(top_ - lo + 1));
    for (size_t i = 0; i < c_.size(); ++i) {
        int k = lo_ + static_cast<int>(i);
        if (k > top_) break;
        c[static_cast<size_t>(k - lo)] = std::move(c_[i]);
    }
    for (size_t i = 0; i < b.c_.size(); ++i) {
        int k = b.lo_ + static_cast<int>(i);
        if (k > top_) break;
        c[static_cast<size_t>(k - lo)] += b.c_[i];
    }
    *this = QSeries(lo, hi, std::move(c));
    return *this;
}

QSeries QSeries::operator-() const {
    QSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

QSeries& QSeries::operator-=(const QSeries& b) { return *this += -b; }

QSeries operator+(QSeries a, const QSeries& b) { return a += b; }

QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }

QSeries scale(const Int& c, QSeries a) {
    if (c.is_zero()) return QSeries::zero(a.hi());
    std::vector<Int> v = a.coeffs();
    for (auto& x : v) x *= c;
    return QSeries(a.lo(), a.hi(), std::move(v));
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    long h1 = static_cast<long>(a.hi()) + b.valuation();
    long h2 = static_cast<long>(b.hi()) + a.valuation();
    int hi = clamp_hi(std::min(h1, h2));
    if (a.exact() && b.exact()) hi = QSeries::kExact;
    if (a.is_zero() || b.is_zero()) return QSeries::zero(hi);
    int lo = a.lo() + b.lo();
    int top = std::min(a.top() + b.top(), hi);
    if (top < lo) return QSeries::zero(hi);
    std::vector<Int> c(static_cast<size_t>(top - lo + 1));
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    for (size_t i = 0; i < ac.size(); ++i) {
        if (ac[i].is_zero()) continue;
        for (size_t j = 0; j < bc.size(); ++j) {
            size_t k = i + j;
            if (static_cast<int>(k) > top - lo) break;
            if (bc[j].is_zero()) continue;
            c[k] += ac[i] * bc[j];
        }
    }
    return QSeries(lo, hi, std::move(c));
}

QSeries add(const QSeries& a, const QSeries& b) { return a + b; }

QSeries mul(const QSeries& a, const QSeries& b) { return a * b; }

QSeries shift(const QSeries& a, int k) {
    int hi = a.exact() ? QSeries::kExact : a.hi() + k;
    if (a.is_zero()) return QSeries::zero(hi);
    return QSeries(a.lo() + k, hi, a.coeffs());
}

QSeries inverse_unit(const QSeries& a, std::optional<int> hi) {
    if (a.is_zero()) throw NonUnitLeadingCoefficient();
    const Int& c0 = a.coeffs().front();
    if (c0 != 1 && c0 != -1) throw NonUnitLeadingCoefficient();
    int lo = -a.lo();
    int top;
    if (a.exact()) {
        if (a.coeffs().size() == 1) return QSeries::monomial(c0, lo);
        if (!hi) throw Error("inverse of a polynomial needs a window");
        top = *hi;
    } else {
        top = a.hi() - 2 * a.lo();
        if (hi) top = std::min(top, *hi);
    }
    if (top < lo) return QSeries::zero(top);
    size_t n = static_cast<size_t>(top - lo + 1);
    const auto& ac = a.coeffs();
    std::vector<Int> b(n);
    b[0] = c0;
    for (size_t k = 1; k < n; ++k) {
        Int s = 0;
        for (size_t i = 1; i <= k && i < ac.size(); ++i) s += ac[i] * b[k - i];
        b[k] = -c0 * s;
    }
    return QSeries(lo, top, std::move(b));
}

void divide_by_one_minus_q(std::vector<Int>& run, int r) {
    size_t step = static_cast<size_t>(2 * r);
    for (size_t k = step; k < run.size(); ++k) run[k] += run[k - step];
}

QSeries poincare_P(int j, int hi) {
    if (j <= 0 || hi >= QSeries::kExact) {
        if (j <= 0) return QSeries::one(hi);
        throw Error("P_j needs a finite window");
    }
    if (hi < 0) return QSeries::zero(hi);
    std::vector<Int> run(static_cast<size_t>(hi + 1));
    run[0] = 1;
    for (int r = 1; r <= j; ++r) divide_by_one_minus_q(run, r);
    return QSeries(0, hi, std::move(run));
}

std::optional<SeriesDifference> first_difference(const QSeries& a, const QSeries& b, int upto) {
    int hi = std::min({a.hi(), b.hi(), upto});
    int lo = std::min(a.valuation(), b.valuation());
    for (int k = lo; k <= hi; ++k) {
        Int x = a.coeff(k), y = b.coeff(k);
        if (x != y) return SeriesDifference{k, x, y};
        if (k > a.top() && k > b.top()) break;
    }
    return std::nullopt;
}

bool agree(const QSeries& a, const QSeries& b, int upto) { return !first_difference(a, b, upto); }

LaurentPoly::LaurentPoly(int lo, std::vector<Int> coeffs) : lo_(lo), c_(std::move(coeffs)) { normalize(); }

LaurentPoly::LaurentPoly(const QSeries& s) {
    if (!s.exact()) throw Error("a truncated series is not a polynomial");
    if (!s.is_zero()) {
        lo_ = s.lo();
        c_ = s.coeffs();
    }
}

LaurentPoly LaurentPoly::monomial(const Int& c, int k) { return LaurentPoly(k, {c}); }

void LaurentPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    lo_ = c_.empty() ? 0 : lo_ + static_cast<int>(lead);
}

Int LaurentPoly::coeff(int k) const {
    if (k < lo_ || k >= lo_ + static_cast<int>(c_.size())) return 0;
    return c_[static_cast<size_t>(k - lo_)];
}

QSeries LaurentPoly::series() const {
    if (c_.empty()) return QSeries();
    return QSeries(lo_, QSeries::kExact, c_);
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    return LaurentPoly(a.series() + b.series());
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return LaurentPoly(a.series() - b.series());
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    return LaurentPoly(a.series() * b.series());
}

LaurentPoly involute(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    const auto& c = p.coeffs();
    int top = p.lo() + static_cast<int>(c.size()) - 1;
    std::vector<Int> r(c.size());
    for (size_t i = 0; i < c.size(); ++i) {
        int k = p.lo() + static_cast<int>(i);
        // t^k lands on t^(-k), index (-k) - (-top)
        r[static_cast<size_t>(top - k)] = (k % 2 == 0) ? c[i] : Int(-c[i]);
    }
    return LaurentPoly(-top, std::move(r));
}

}  // namespace qdilog
