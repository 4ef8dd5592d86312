#pragma once

#include <concepts>

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

namespace qdilog {

using Int = boost::multiprecision::cpp_int;

// Truncated Laurent series in t = q^(1/2).  Coefficients of t^k are known for
// every k <= hi(); above hi() nothing is known.  hi() == kExact marks a finite
// Laurent polynomial.  Storage is normalized: the first stored coefficient is
// nonzero and trailing zeros are dropped, so coeffs()[i] is the coefficient of
// t^(lo()+i) and everything between the last stored entry and hi() is zero.
class QSeries {
public:
    static constexpr int kExact = 1 << 28;

    QSeries() = default;  // exact zero
    QSeries(int lo, int hi, std::vector<Int> coeffs);

    static QSeries zero(int hi = kExact);
    static QSeries one(int hi = kExact);
    static QSeries monomial(const Int& c, int k, int hi = kExact);

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool exact() const { return hi_ >= kExact; }
    bool is_zero() const { return c_.empty(); }
    // Lowest exponent that may carry a nonzero coefficient.
    int valuation() const { return c_.empty() ? (exact() ? kExact : hi_ + 1) : lo_; }
    // Highest stored exponent (lo()-1 for zero).
    int top() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    // Coefficient of t^k; k must not exceed hi().
    Int coeff(int k) const;

    QSeries truncated(int hi) const;

    QSeries& operator+=(const QSeries& b);
    QSeries& operator-=(const QSeries& b);
    QSeries operator-() const;

    // Exact structural equality (same window and coefficients).
    bool operator==(const QSeries& b) const = default;

private:
    void normalize();

    int lo_ = kExact;
    int hi_ = kExact;
    std::vector<Int> c_;
};

QSeries operator+(QSeries a, const QSeries& b);
QSeries operator-(QSeries a, const QSeries& b);
QSeries operator*(const QSeries& a, const QSeries& b);
QSeries scale(const Int& c, QSeries a);
template <class T>
    requires std::same_as<T, Int>
QSeries operator*(const T& c, QSeries a) {
    return scale(c, std::move(a));
}

QSeries add(const QSeries& a, const QSeries& b);
QSeries mul(const QSeries& a, const QSeries& b);
// Multiplication by t^k.
QSeries shift(const QSeries& a, int k);
// Inverse of a series with leading coefficient +1 or -1.  A polynomial with
// more than one term has an infinite inverse and needs a window.
QSeries inverse_unit(const QSeries& a, std::optional<int> hi = std::nullopt);
// P_j = prod_{r=1..j} 1/(1-q^r), known through t^hi.
QSeries poincare_P(int j, int hi);
// In-place multiplication by 1/(1-q^r) of a dense coefficient run.
void divide_by_one_minus_q(std::vector<Int>& run, int r);

struct SeriesDifference {
    int exponent;
    Int left;
    Int right;
};

// First exponent <= upto (and inside both windows) where a and b differ.
std::optional<SeriesDifference> first_difference(const QSeries& a, const QSeries& b,
                                                 int upto = QSeries::kExact);
bool agree(const QSeries& a, const QSeries& b, int upto = QSeries::kExact);

// Exact Laurent polynomial in t.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(int lo, std::vector<Int> coeffs);
    explicit LaurentPoly(const QSeries& exact_series);

    static LaurentPoly monomial(const Int& c, int k);

    int lo() const { return lo_; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(int k) const;
    QSeries series() const;

    bool operator==(const LaurentPoly& b) const = default;

private:
    void normalize();

    int lo_ = 0;
    std::vector<Int> c_;
};

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
// t^k -> (-1)^k t^(-k)
LaurentPoly involute(const LaurentPoly& p);

}  // namespace qdilog
