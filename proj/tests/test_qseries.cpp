#include <doctest.h>

#include "qdilog/errors.hpp"
#include "qdilog/qseries.hpp"

#include <random>

using namespace qdilog;

namespace {

// Partitions of k into parts of size at most j.
long partitions(int k, int j) {
    if (k == 0) return 1;
    if (k < 0 || j == 0) return 0;
    return partitions(k - j, j) + partitions(k, j - 1);
}

QSeries random_series(std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> c(-5, 5);
    std::vector<Int> v;
    for (int k = lo; k <= hi; ++k) v.push_back(c(rng));
    return QSeries(lo, hi, v);
}

}  // namespace

TEST_CASE("normalization strips zeros and keeps the window") {
    QSeries s(-2, 6, {0, 0, 3, 0, 1, 0, 0});
    CHECK(s.lo() == 0);
    CHECK(s.hi() == 6);
    CHECK(s.coeffs().size() == 3);
    CHECK(s.coeff(2) == 1);
    CHECK(s.coeff(5) == 0);
    CHECK_THROWS_AS(s.coeff(7), Error);
    CHECK(QSeries().exact());
    CHECK(QSeries::zero(4).valuation() == 5);
}

TEST_CASE("product windows follow the valuations") {
    QSeries a = QSeries::one(5);
    QSeries b = QSeries::monomial(1, 3);
    QSeries p = a * b;
    CHECK(p.hi() == 8);
    QSeries c = QSeries(2, 10, {1, 1});
    CHECK((a * c).hi() == 7);
    CHECK((QSeries::monomial(2, 1) * QSeries::monomial(3, 4)).exact());
}

TEST_CASE("ring axioms on random truncated series") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        QSeries a = random_series(rng, -3, 12), b = random_series(rng, 0, 9), c = random_series(rng, 1, 15);
        int w = 8;
        CHECK(agree(a * b, b * a, w));
        CHECK(agree((a * b) * c, a * (b * c), w));
        CHECK(agree(a * (b + c), a * b + a * c, w));
        CHECK(agree(a - a, QSeries::zero(w), w));
    }
}

TEST_CASE("P_j counts partitions into parts of size at most j") {
    for (int j = 0; j <= 8; ++j) {
        QSeries p = poincare_P(j, 40);
        for (int k = 0; k <= 40; ++k) CHECK(p.coeff(k) == (k % 2 ? 0 : partitions(k / 2, j)));
    }
    CHECK(poincare_P(0, 10) == QSeries::one(10));
}

TEST_CASE("inverse of a unit series") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        QSeries a = random_series(rng, 1, 14);
        std::vector<Int> v = a.coeffs();
        v.insert(v.begin(), Int(trial % 2 ? -1 : 1));
        QSeries u(0, 14, v);
        QSeries inv = inverse_unit(u);
        CHECK(inv.hi() == 14);
        CHECK(agree(u * inv, QSeries::one(14), 14));
    }
    QSeries one_minus_q(0, QSeries::kExact, {1, 0, -1});
    QSeries inv = inverse_unit(one_minus_q, 20);
    CHECK(agree(inv, poincare_P(1, 20), 20));
    CHECK_THROWS_AS(inverse_unit(one_minus_q), Error);
    CHECK_THROWS_AS(inverse_unit(QSeries(0, 10, {2, 1})), NonUnitLeadingCoefficient);
    CHECK(inverse_unit(QSeries::monomial(-1, 3)) == QSeries::monomial(-1, -3));
}

TEST_CASE("first difference reports exponent and both values") {
    QSeries a(0, 20, {1, 2, 3, 4});
    QSeries b(0, 20, {1, 2, 5, 4});
    auto d = first_difference(a, b);
    REQUIRE(d);
    CHECK(d->exponent == 2);
    CHECK(d->left == 3);
    CHECK(d->right == 5);
    CHECK_FALSE(first_difference(a, b, 1));
    CHECK(agree(a, QSeries(0, 3, {1, 2, 3, 4})));
}

TEST_CASE("laurent polynomial involution") {
    LaurentPoly p(-2, {1, -3, 0, 4});
    CHECK(involute(involute(p)) == p);
    CHECK(involute(LaurentPoly::monomial(1, 3)) == LaurentPoly::monomial(-1, -3));
    CHECK(involute(p * p) == involute(p) * involute(p));
}
