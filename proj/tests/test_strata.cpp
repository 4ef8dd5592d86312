#include <doctest.h>

#include "qdilog/errors.hpp"
#include "qdilog/exact_rank.hpp"
#include "qdilog/strata.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <random>

using namespace qdilog;

namespace {

DimVector dims(std::initializer_list<int> v) {
    DimVector g(static_cast<long>(v.size()));
    long i = 0;
    for (int x : v) g(i++) = x;
    return g;
}

// Every multiplicity vector with entries <= bound whose dimension is g.
std::vector<std::vector<int>> brute_kostant(int N, const DimVector& g) {
    size_t count = lace_order(N).size();
    int bound = g.size() ? g.maxCoeff() : 0;
    std::vector<std::vector<int>> out;
    std::vector<int> m(count, 0);
    while (true) {
        KostantPartition kp{N, m};
        if (kp.dimension() == g) out.push_back(m);
        size_t i = 0;
        for (; i < count; ++i) {
            if (m[i] < bound) {
                ++m[i];
                break;
            }
            m[i] = 0;
        }
        if (i == count) break;
    }
    return out;
}

std::vector<LineOrientation> all_orientations(int N) {
    std::vector<LineOrientation> out;
    for (int mask = 0; mask < (1 << (N - 1)); ++mask) {
        LineOrientation o;
        for (int a = 0; a < N - 1; ++a) o.rightward.push_back((mask >> a) & 1);
        out.push_back(o);
    }
    return out;
}

}  // namespace

TEST_CASE("orientation patterns") {
    LineOrientation o = LineOrientation::parse("rrl");
    CHECK(o.size() == 4);
    CHECK(o.pattern() == "rrl");
    CHECK(o.quiver().arrows() == std::vector<Arrow>{{0, 1}, {1, 2}, {3, 2}});
    CHECK_THROWS_AS(LineOrientation::parse("rx"), Error);
    // row 1 of S is 1 <- 2, row 2 is 3 -> 4; column 1 is 1 -> 3, column 2 is 2 <- 4
    GridQuiver s(2, 2);
    CHECK(line_orientation(s, Axis::Horizontal, 1).pattern() == "l");
    CHECK(line_orientation(s, Axis::Horizontal, 2).pattern() == "r");
    CHECK(line_orientation(s, Axis::Vertical, 1).pattern() == "r");
    CHECK(line_orientation(s, Axis::Vertical, 2).pattern() == "l");
}

TEST_CASE("exact rank matches floating point LU on small matrices") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> d(-2, 2), sz(1, 7);
    for (int trial = 0; trial < 200; ++trial) {
        int r = sz(rng), c = sz(rng);
        Eigen::MatrixXi m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m(i, j) = d(rng);
        if (trial % 3 == 0 && r > 1) m.row(r - 1) = m.row(0) * 2;
        Eigen::FullPivLU<Eigen::MatrixXd> lu(m.cast<double>());
        CHECK(exact_rank(m) == lu.rank());
    }
    CHECK(exact_rank(Eigen::MatrixXi(0, 3)) == 0);
}

TEST_CASE("Kostant partitions agree with brute force") {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> d(0, 2);
    for (int N = 1; N <= 4; ++N)
        for (int trial = 0; trial < 6; ++trial) {
            LineOrientation o = all_orientations(N)[static_cast<size_t>(trial) % all_orientations(N).size()];
            DimVector g(N);
            for (int i = 0; i < N; ++i) g(i) = d(rng);
            std::vector<std::vector<int>> got;
            for (const KostantPartition& kp : enumerate_kostant(o, g)) {
                CHECK(kp.dimension() == g);
                got.push_back(kp.mult);
            }
            std::vector<std::vector<int>> want = brute_kostant(N, g);
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            CHECK(got == want);
        }
}

TEST_CASE("normal form of a Kostant partition of (5,5,5,4)") {
    LineOrientation o = LineOrientation::parse("rrl");
    std::vector<Interval> ord = lace_order(4);
    KostantPartition kp{4, std::vector<int>(ord.size(), 0)};
    auto set = [&](int k, int l, int m) {
        kp.mult[static_cast<size_t>(std::find(ord.begin(), ord.end(), Interval{k, l}) - ord.begin())] = m;
    };
    set(1, 4, 2);
    for (auto [k, l] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 4}, {1, 1}, {3, 3}, {4, 4}}) set(k, l, 1);
    REQUIRE(kp.dimension() == dims({5, 5, 5, 4}));

    NormalForm nf = normal_form(o, kp);
    REQUIRE(nf.maps.size() == 3);
    auto expect = [](int rows, int cols, std::vector<std::pair<int, int>> ones) {
        Eigen::MatrixXi m = Eigen::MatrixXi::Zero(rows, cols);
        for (auto [i, j] : ones) m(i - 1, j - 1) = 1;
        return m;
    };
    CHECK(nf.maps[0] == expect(5, 5, {{1, 1}, {2, 2}, {3, 3}, {4, 4}}));
    CHECK(nf.maps[1] == expect(5, 5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}}));
    CHECK(nf.maps[2] == expect(5, 4, {{2, 1}, {3, 2}, {4, 3}}));
}

TEST_CASE("dim Hom - dim Ext = Euler form for all interval pairs on A5") {
    for (const LineOrientation& o : all_orientations(5)) {
        Quiver q = o.quiver();
        for (const Interval& a : lace_order(5))
            for (const Interval& b : lace_order(5)) {
                int chi = euler_form(q, interval_module(o, a).dims, interval_module(o, b).dims);
                CHECK(dhom(o, a, b) - dext(o, a, b) == chi);
            }
        for (const Interval& a : lace_order(5)) {
            CHECK(dhom(o, a, a) == 1);
            CHECK(dext(o, a, a) == 0);
        }
    }
}

TEST_CASE("orbit codimension agrees with the rank oracle") {
    for (int N = 1; N <= 3; ++N)
        for (const LineOrientation& o : all_orientations(N)) {
            DimVector g = DimVector::Zero(N);
            while (true) {
                for (const KostantPartition& kp : enumerate_kostant(o, g)) {
                    CHECK(codim_orbit(o, kp) == codim_orbit_oracle(o, kp));
                    CHECK(codim_orbit(o, kp) >= 0);
                }
                int i = 0;
                for (; i < N; ++i) {
                    if (g(i) < 2) {
                        ++g(i);
                        break;
                    }
                    g(i) = 0;
                }
                if (i == N) break;
            }
        }
}

TEST_CASE("strata tables of (2,2,1,1)") {
    GridQuiver s(2, 2);
    DimVector g = dims({2, 2, 1, 1});
    std::vector<StratumData> h = stratum_table(s, g, Axis::Horizontal);
    std::vector<StratumData> v = stratum_table(s, g, Axis::Vertical);
    REQUIRE(h.size() == 6);
    REQUIRE(v.size() == 4);
    std::vector<int> hc, hw, vc, vw;
    for (const auto& d : h) {
        hc.push_back(d.codim);
        hw.push_back(d.w);
    }
    for (const auto& d : v) {
        vc.push_back(d.codim);
        vw.push_back(d.w);
    }
    CHECK(hc == std::vector<int>{0, 1, 1, 2, 4, 5});
    CHECK(hw == std::vector<int>{2, 1, 0, 0, 0, 0});
    CHECK(vc == std::vector<int>{0, 2, 2, 4});
    CHECK(vw == std::vector<int>{1, 0, 0, 0});
    // exponents of P1 and P2 per stratum
    auto powers = [](const StratumData& d) {
        std::vector<int> p = d.p_powers;
        p.resize(3, 0);
        return std::make_pair(p[1], p[2]);
    };
    std::vector<std::pair<int, int>> hp, vp;
    for (const auto& d : h) hp.push_back(powers(d));
    for (const auto& d : v) vp.push_back(powers(d));
    CHECK(hp == std::vector<std::pair<int, int>>{{1, 1}, {4, 0}, {2, 1}, {5, 0}, {1, 2}, {2, 2}});
    CHECK(vp == std::vector<std::pair<int, int>>{{4, 0}, {3, 1}, {3, 1}, {2, 2}});
}

TEST_CASE("geometric sums of both axes agree") {
    GridQuiver s(2, 2);
    QSeries h = geometric_sum(s, dims({2, 2, 1, 1}), Axis::Horizontal, 12);
    QSeries v = geometric_sum(s, dims({2, 2, 1, 1}), Axis::Vertical, 12);
    CHECK(agree(h, v));
    std::vector<int> total{0, 1, 6, 18, 43, 87, 160};
    for (int r = 0; r <= 6; ++r) CHECK(h.coeff(2 * r) == total[static_cast<size_t>(r)]);

    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> d(0, 2);
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {3, 3}})
        for (int trial = 0; trial < 3; ++trial) {
            GridQuiver gq(n, m);
            DimVector g(gq.vertex_count());
            for (long i = 0; i < g.size(); ++i) g(i) = d(rng);
            CHECK(agree(geometric_sum(gq, g, Axis::Horizontal, 16), geometric_sum(gq, g, Axis::Vertical, 16)));
        }
}

TEST_CASE("superpotential shift equals the floor count") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> d(0, 3);
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}})
        for (int trial = 0; trial < 5; ++trial) {
            GridQuiver gq(n, m);
            DimVector g(gq.vertex_count());
            for (long i = 0; i < g.size(); ++i) g(i) = d(rng);
            for (const Stratum& s : enumerate_strata(gq, g, Axis::Horizontal)) CHECK(w_shift(gq, s) == c_eta(gq, s));
        }
}
