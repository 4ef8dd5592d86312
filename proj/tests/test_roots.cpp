#include <doctest.h>

#include "qdilog/errors.hpp"
#include "qdilog/roots.hpp"

#include <algorithm>

using namespace qdilog;

namespace {

DimVector dims(std::initializer_list<int> v) {
    DimVector g(static_cast<long>(v.size()));
    long i = 0;
    for (int x : v) g(i++) = x;
    return g;
}

std::vector<DimVector> dim_sequence(const GridQuiver& gq, const RootOrder& o) {
    std::vector<DimVector> out;
    for (const GridRoot& r : o.sequence) out.push_back(dim_vector(gq, r));
    return out;
}

}  // namespace

TEST_CASE("order matrix for n'=5, row 2") {
    GridQuiver gq(2, 5);
    OrderMatrix m = order_matrix(gq, 2);
    REQUIRE(m.size() == 6);
    auto at = [&](int i, int j) { return m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]; };
    auto root = [](int k, int l) { return GridRoot{Axis::Horizontal, 2, k, l}; };
    std::vector<std::tuple<int, int, int, int>> want{
        {1, 1, 1, 1}, {1, 3, 3, 3}, {1, 5, 5, 5}, {2, 2, 1, 3}, {2, 4, 3, 5}, {3, 1, 2, 3}, {3, 3, 1, 5},
        {3, 5, 3, 4}, {4, 2, 2, 5}, {4, 4, 1, 4}, {5, 1, 4, 5}, {5, 3, 2, 4}, {5, 5, 1, 2}, {6, 2, 4, 4},
        {6, 4, 2, 2}};
    int filled = 0;
    for (const auto& row : m)
        for (const auto& e : row) filled += e.has_value();
    CHECK(filled == 15);
    for (auto [i, j, k, l] : want) {
        REQUIRE(at(i, j));
        CHECK(*at(i, j) == root(k, l));
    }
    CHECK(rho(gq, root(1, 5)) == 3);
    CHECK(rho(gq, root(1, 3)) == 2);
}

TEST_CASE("every root appears once in its order matrix") {
    for (int m = 1; m <= 6; ++m) {
        GridQuiver gq(2, m);
        for (int line = 1; line <= 2; ++line) {
            std::vector<GridRoot> seen;
            for (const auto& row : order_matrix(gq, Axis::Horizontal, line))
                for (const auto& e : row)
                    if (e) seen.push_back(*e);
            std::sort(seen.begin(), seen.end());
            CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
            CHECK(seen.size() == static_cast<size_t>(m * (m + 1) / 2));
        }
    }
}

TEST_CASE("canonical orders on S") {
    GridQuiver s(2, 2);
    std::vector<DimVector> h{dims({0, 1, 0, 0}), dims({0, 0, 1, 0}), dims({1, 1, 0, 0}),
                             dims({0, 0, 1, 1}), dims({1, 0, 0, 0}), dims({0, 0, 0, 1})};
    std::vector<DimVector> v{dims({1, 0, 0, 0}), dims({0, 0, 0, 1}), dims({1, 0, 1, 0}),
                             dims({0, 1, 0, 1}), dims({0, 0, 1, 0}), dims({0, 1, 0, 0})};
    CHECK(dim_sequence(s, canonical_order(s, Axis::Horizontal)) == h);
    CHECK(dim_sequence(s, canonical_order(s, Axis::Vertical)) == v);
}

TEST_CASE("rho respects lambda for all row pairs, n' <= 6") {
    for (int m = 1; m <= 6; ++m) {
        GridQuiver gq(4, m);
        const Quiver& q = gq.quiver();
        std::vector<GridRoot> roots = all_roots(gq, Axis::Horizontal);
        for (const GridRoot& a : roots)
            for (const GridRoot& b : roots) {
                int lam = lambda_form(q, dim_vector(gq, a), dim_vector(gq, b));
                int ra = rho(gq, a), rb = rho(gq, b);
                if (ra == rb) CHECK(lam == 0);
                if (ra < rb && a.line != b.line) CHECK(lam <= 0);
                if (ra < rb && a.line == b.line) CHECK(lam >= 0);
            }
    }
}

TEST_CASE("canonical and random orders validate") {
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 5; ++n)
        for (int m = 1; m <= 5; ++m) {
            GridQuiver gq(n, m);
            for (Axis axis : {Axis::Horizontal, Axis::Vertical}) {
                RootOrder c = canonical_order(gq, axis);
                CHECK(validate_order(gq, c).ok);
                RootOrder r = random_valid_order(gq, axis, rng);
                CHECK(validate_order(gq, r).ok);
                CHECK(equivalent_orders(gq, c, r));
            }
        }
}

TEST_CASE("validate_order rejects bad orders") {
    GridQuiver s(2, 2);
    RootOrder o = canonical_order(s, Axis::Horizontal);
    std::reverse(o.sequence.begin(), o.sequence.end());
    OrderCheck chk = validate_order(s, o);
    CHECK_FALSE(chk.ok);
    REQUIRE(chk.violation);
    CHECK(chk.violation->first < chk.violation->second);
    o.sequence.pop_back();
    CHECK_THROWS_AS(validate_order(s, o), IncompleteOrder);
    RootOrder mixed = canonical_order(s, Axis::Horizontal);
    mixed.sequence[0].axis = Axis::Vertical;
    CHECK_THROWS_AS(validate_order(s, mixed), IncompleteOrder);
}

TEST_CASE("up and down counts of three row roots") {
    GridQuiver gq(3, 4);
    GridRoot alpha{Axis::Horizontal, 1, 1, 3}, beta{Axis::Horizontal, 2, 1, 4}, gamma{Axis::Horizontal, 3, 3, 4};
    UpDown ab = up_down_counts(gq, alpha, beta);
    UpDown bg = up_down_counts(gq, beta, gamma);
    UpDown ag = up_down_counts(gq, alpha, gamma);
    CHECK(ab.down == 2);
    CHECK(ab.up == 1);
    CHECK(bg.down == 1);
    CHECK(bg.up == 1);
    CHECK(ag.down == 0);
    CHECK(ag.up == 0);
    CHECK_THROWS_AS(up_down_counts(gq, beta, alpha), Error);
    CHECK_THROWS_AS(intersect(alpha, GridRoot{Axis::Vertical, 1, 1, 2}), AxisMismatch);
}

TEST_CASE("up/down and lambda agree on both axes") {
    for (int n = 2; n <= 4; ++n)
        for (int m = 2; m <= 4; ++m) {
            GridQuiver gq(n, m);
            for (Axis axis : {Axis::Horizontal, Axis::Vertical})
                for (const GridRoot& a : all_roots(gq, axis))
                    for (const GridRoot& b : all_roots(gq, axis)) {
                        if (a.line + 1 != b.line) continue;
                        UpDown c = up_down_counts(gq, a, b);
                        CHECK(lambda_form(gq.quiver(), dim_vector(gq, a), dim_vector(gq, b)) == c.down - c.up);
                    }
        }
}

TEST_CASE("sc, its restatement and r_floor agree") {
    for (int m = 1; m <= 6; ++m) {
        GridQuiver gq(3, m);
        for (const GridRoot& a : all_roots(gq, Axis::Horizontal))
            for (const GridRoot& b : all_roots(gq, Axis::Horizontal)) {
                if (a.line >= b.line) continue;
                CHECK(sc(gq, a, b) == sc_restated(gq, a, b));
                if (b.line == a.line + 1) CHECK(r_floor(a, b) == sc(gq, a, b));
            }
    }
    GridRoot a{Axis::Horizontal, 1, 1, 4}, b{Axis::Horizontal, 2, 1, 4};
    CHECK(intersect(a, b).delta == 3);
    CHECK(intersect(a, b).size() == 4);
    CHECK(r_floor(a, b) == 2);
}

TEST_CASE("tridiagonal signature") {
    for (int p = 1; p <= 12; ++p) {
        Signature s = tridiagonal_signature(p);
        CHECK(s == Signature{p / 2, p / 2, p % 2});
        CHECK(s == tridiagonal_signature_numeric(p));
    }
    CHECK_THROWS_AS(tridiagonal_signature(0), Error);
}

TEST_CASE("axis names") {
    CHECK(parse_axis("v") == Axis::Vertical);
    CHECK(to_string(Axis::Horizontal) == "horizontal");
    CHECK_THROWS_AS(parse_axis("diagonal"), Error);
}
