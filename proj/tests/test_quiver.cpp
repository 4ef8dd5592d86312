#include <doctest.h>

#include "qdilog/errors.hpp"
#include "qdilog/quiver.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace qdilog;

namespace {

using Coord = std::pair<int, int>;

std::set<std::pair<Coord, Coord>> arrow_coords(const GridQuiver& gq) {
    std::set<std::pair<Coord, Coord>> out;
    for (const Arrow& a : gq.quiver().arrows()) out.insert({gq.coord(a.tail), gq.coord(a.head)});
    return out;
}

DimVector dims(std::initializer_list<int> v) {
    DimVector g(static_cast<long>(v.size()));
    long i = 0;
    for (int x : v) g(i++) = x;
    return g;
}

}  // namespace

TEST_CASE("S has arrows 1->3, 3->4, 4->2, 2->1") {
    GridQuiver s(2, 2);
    std::set<std::pair<Coord, Coord>> want{{{1, 1}, {2, 1}}, {{2, 1}, {2, 2}}, {{2, 2}, {1, 2}}, {{1, 2}, {1, 1}}};
    CHECK(arrow_coords(s) == want);
    CHECK(s.id(1, 1) == 0);
    CHECK(s.id(2, 1) == 2);
    CHECK(s.square_count() == 1);
}

TEST_CASE("A3 x A4 arrow set") {
    GridQuiver gq(3, 4);
    std::set<std::pair<Coord, Coord>> want{
        {{1, 1}, {2, 1}}, {{3, 1}, {2, 1}}, {{2, 2}, {1, 2}}, {{2, 2}, {3, 2}}, {{1, 3}, {2, 3}}, {{3, 3}, {2, 3}},
        {{2, 4}, {1, 4}}, {{2, 4}, {3, 4}}, {{1, 2}, {1, 1}}, {{1, 2}, {1, 3}}, {{1, 4}, {1, 3}}, {{2, 1}, {2, 2}},
        {{2, 3}, {2, 2}}, {{2, 3}, {2, 4}}, {{3, 2}, {3, 1}}, {{3, 2}, {3, 3}}, {{3, 4}, {3, 3}}};
    CHECK(arrow_coords(gq) == want);
    for (int v = 0; v < gq.vertex_count(); ++v) CHECK(gq.id(gq.coord(v).first, gq.coord(v).second) == v);
}

TEST_CASE("vertex classes") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m) {
            GridQuiver gq(n, m);
            CHECK(gq.ver_tails() == gq.hor_heads());
            CHECK(gq.ver_heads() == gq.hor_tails());
            CHECK(gq.hor_heads().size() + gq.hor_tails().size() == static_cast<size_t>(n * m));
            for (const Arrow& a : gq.quiver().arrows()) {
                bool horizontal = gq.coord(a.tail).first == gq.coord(a.head).first;
                // horizontal arrows end in HorH; vertical arrows start there
                CHECK(gq.vertex_class(horizontal ? a.head : a.tail) == VertexClass::HorH);
                CHECK(gq.vertex_class(horizontal ? a.tail : a.head) == VertexClass::HorT);
            }
        }
}

TEST_CASE("forms on S") {
    GridQuiver s(2, 2);
    const Quiver& q = s.quiver();
    DimVector e3 = q.simple(2), e4 = q.simple(3);
    CHECK(lambda_form(q, e3, e4) == 1);
    CHECK(lambda_form(q, e4, e3) == -1);
    CHECK(euler_form(q, e3, e4) == -1);
    CHECK(tits_form(q, dims({1, 1, 1, 1})) == 0);
    CHECK(is_root(q, dims({1, 0, 1, 0})));
    CHECK_FALSE(is_root(q, dims({1, 1, 1, 1})));
    CHECK_THROWS_AS(lambda_form(q, dims({1, 0}), e3), DimensionMismatch);

    QuadraticForms f = quadratic_forms(s, dims({2, 2, 1, 1}));
    CHECK(f.up == -2);
    CHECK(f.down == -2);
    CHECK(f.left == -4);
    CHECK(f.right == -1);
    CHECK(f.hip == 4);
    CHECK(f.vip == 5);
}

TEST_CASE("lambda is antisymmetric and hip + vip sums over all arrows") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(0, 3);
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 4; ++m) {
            GridQuiver gq(n, m);
            const Quiver& q = gq.quiver();
            CHECK(q.lambda_matrix() == Eigen::MatrixXi(-q.lambda_matrix().transpose()));
            for (int trial = 0; trial < 10; ++trial) {
                DimVector g(gq.vertex_count());
                for (long i = 0; i < g.size(); ++i) g(i) = d(rng);
                long all = 0;
                for (const Arrow& a : q.arrows()) all += g(a.tail) * g(a.head);
                QuadraticForms f = quadratic_forms(gq, g);
                CHECK(f.hip + f.vip == all);
                CHECK(tits_form(q, g) == euler_form(q, g, g));
            }
        }
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(GridQuiver(0, 2), Error);
    CHECK_THROWS_AS(Quiver(2, {{0, 2}}), Error);
    CHECK(square_product(2, 3).vertex_count() == 6);
}
