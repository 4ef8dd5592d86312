#include "qdilog/strata.hpp"

#include "qdilog/errors.hpp"
#include "qdilog/exact_rank.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace qdilog {

Quiver LineOrientation::quiver() const {
    std::vector<Arrow> arrows;
    for (int a = 0; a + 1 < size(); ++a) {
        if (rightward[static_cast<size_t>(a)])
            arrows.push_back({a, a + 1});
        else
            arrows.push_back({a + 1, a});
    }
    return Quiver(size(), std::move(arrows));
}

std::string LineOrientation::pattern() const {
    std::string s;
    for (bool r : rightward) s += r ? 'r' : 'l';
    return s;
}

LineOrientation LineOrientation::parse(const std::string& pattern) {
    LineOrientation o;
    for (char c : pattern) {
        if (c == 'r' || c == 'R')
            o.rightward.push_back(true);
        else if (c == 'l' || c == 'L')
            o.rightward.push_back(false);
        else
            throw Error(std::string("orientation letters are r and l, got '") + c + "'");
    }
    return o;
}

LineOrientation line_orientation(const GridQuiver& gq, Axis axis, int line) {
    LineOrientation o;
    int len = line_length(gq, axis);
    for (int x = 1; x < len; ++x) {
        bool odd = (line + x) % 2 == 1;
        o.rightward.push_back(axis == Axis::Horizontal ? odd : !odd);
    }
    return o;
}

DimVector line_dims(const GridQuiver& gq, const DimVector& g, Axis axis, int line) {
    int len = line_length(gq, axis);
    DimVector d(len);
    for (int x = 1; x <= len; ++x) d(x - 1) = g(line_vertex(gq, axis, line, x));
    return d;
}

std::vector<Interval> lace_order(int N) {
    std::vector<Interval> out;
    for (int k = 1; k <= N; ++k)
        for (int l = k + 1; l <= N; ++l) out.push_back({k, l});
    for (int k = 1; k <= N; ++k) out.push_back({k, k});
    return out;
}

int KostantPartition::m(int k, int l) const {
    std::vector<Interval> ord = lace_order(N);
    auto it = std::find(ord.begin(), ord.end(), Interval{k, l});
    if (it == ord.end()) throw Error("interval outside the line");
    return mult[static_cast<size_t>(it - ord.begin())];
}

DimVector KostantPartition::dimension() const {
    DimVector g = DimVector::Zero(N);
    std::vector<Interval> ord = lace_order(N);
    for (size_t i = 0; i < ord.size(); ++i)
        for (int x = ord[i].k; x <= ord[i].l; ++x) g(x - 1) += mult[i];
    return g;
}

namespace {

void kostant_rec(const std::vector<Interval>& ord, size_t at, size_t nonsimple, DimVector& rem,
                 std::vector<int>& mult, std::vector<KostantPartition>& out) {
    int N = static_cast<int>(rem.size());
    if (at == nonsimple) {
        for (int x = 0; x < N; ++x) mult[nonsimple + static_cast<size_t>(x)] = rem(x);
        out.push_back({N, mult});
        return;
    }
    const Interval& r = ord[at];
    int top = rem.segment(r.k - 1, r.l - r.k + 1).minCoeff();
    for (int c = top; c >= 0; --c) {
        rem.segment(r.k - 1, r.l - r.k + 1).array() -= c;
        mult[at] = c;
        kostant_rec(ord, at + 1, nonsimple, rem, mult, out);
        rem.segment(r.k - 1, r.l - r.k + 1).array() += c;
    }
    mult[at] = 0;
}

}  // namespace

std::vector<KostantPartition> enumerate_kostant(const LineOrientation& o, const DimVector& g) {
    int N = o.size();
    if (g.size() != N) throw DimensionMismatch(g.size(), N);
    if ((g.array() < 0).any()) throw Error("dimension vectors are non-negative");
    std::vector<Interval> ord = lace_order(N);
    std::vector<int> mult(ord.size(), 0);
    std::vector<KostantPartition> out;
    DimVector rem = g;
    kostant_rec(ord, 0, ord.size() - static_cast<size_t>(N), rem, mult, out);
    return out;
}

std::vector<Stratum> enumerate_strata(const GridQuiver& gq, const DimVector& g, Axis axis) {
    if (g.size() != gq.vertex_count()) throw DimensionMismatch(g.size(), gq.vertex_count());
    std::vector<std::vector<KostantPartition>> per;
    for (int line = 1; line <= line_count(gq, axis); ++line)
        per.push_back(enumerate_kostant(line_orientation(gq, axis, line), line_dims(gq, g, axis, line)));
    std::vector<Stratum> out;
    std::vector<size_t> idx(per.size(), 0);
    while (true) {
        Stratum s{axis, {}};
        for (size_t i = 0; i < per.size(); ++i) s.parts.push_back(per[i][idx[i]]);
        out.push_back(std::move(s));
        size_t i = per.size();
        while (i > 0) {
            --i;
            if (++idx[i] < per[i].size()) break;
            idx[i] = 0;
            if (i == 0) return out;
        }
        if (per.empty()) return out;
    }
}

NormalForm normal_form(const LineOrientation& o, const KostantPartition& kp) {
    int N = o.size();
    if (kp.N != N) throw DimensionMismatch(kp.N, N);
    NormalForm nf;
    nf.dims = kp.dimension();
    for (int a = 0; a + 1 < N; ++a) {
        bool r = o.rightward[static_cast<size_t>(a)];
        int t = r ? a : a + 1, h = r ? a + 1 : a;
        nf.maps.push_back(Eigen::MatrixXi::Zero(nf.dims(h), nf.dims(t)));
    }
    std::vector<int> next(static_cast<size_t>(N), 0);
    std::vector<Interval> ord = lace_order(N);
    for (size_t i = 0; i < ord.size(); ++i) {
        const Interval& r = ord[i];
        for (int c = 0; c < kp.mult[i]; ++c) {
            std::vector<int> dot(static_cast<size_t>(N), -1);
            for (int x = r.k - 1; x <= r.l - 1; ++x) dot[static_cast<size_t>(x)] = next[static_cast<size_t>(x)]++;
            for (int a = r.k - 1; a + 1 <= r.l - 1; ++a) {
                bool right = o.rightward[static_cast<size_t>(a)];
                int t = right ? a : a + 1, h = right ? a + 1 : a;
                nf.maps[static_cast<size_t>(a)](dot[static_cast<size_t>(h)], dot[static_cast<size_t>(t)]) = 1;
            }
        }
    }
    return nf;
}

NormalForm interval_module(const LineOrientation& o, const Interval& r) {
    KostantPartition kp{o.size(), std::vector<int>(lace_order(o.size()).size(), 0)};
    std::vector<Interval> ord = lace_order(o.size());
    kp.mult[static_cast<size_t>(std::find(ord.begin(), ord.end(), r) - ord.begin())] = 1;
    return normal_form(o, kp);
}

namespace {

struct Differential {
    Eigen::MatrixXi matrix;
    int source;
    int target;
};

// f = (f_v) with f_v : M_v -> N_v, sent to (f_h phi^M_a - phi^N_a f_t)_a.
Differential ringel(const LineOrientation& o, const NormalForm& M, const NormalForm& N) {
    int nv = o.size();
    std::vector<int> off(static_cast<size_t>(nv) + 1, 0);
    for (int v = 0; v < nv; ++v) off[static_cast<size_t>(v) + 1] = off[static_cast<size_t>(v)] + N.dims(v) * M.dims(v);
    int source = off.back();
    int target = 0;
    std::vector<int> toff;
    for (int a = 0; a + 1 < nv; ++a) {
        bool r = o.rightward[static_cast<size_t>(a)];
        int t = r ? a : a + 1, h = r ? a + 1 : a;
        toff.push_back(target);
        target += N.dims(h) * M.dims(t);
    }
    Eigen::MatrixXi d = Eigen::MatrixXi::Zero(target, source);
    auto fidx = [&](int v, int r, int c) { return off[static_cast<size_t>(v)] + r * M.dims(v) + c; };
    for (int a = 0; a + 1 < nv; ++a) {
        bool right = o.rightward[static_cast<size_t>(a)];
        int t = right ? a : a + 1, h = right ? a + 1 : a;
        const Eigen::MatrixXi& pm = M.maps[static_cast<size_t>(a)];
        const Eigen::MatrixXi& pn = N.maps[static_cast<size_t>(a)];
        for (int r = 0; r < N.dims(h); ++r)
            for (int c = 0; c < M.dims(t); ++c) {
                int row = toff[static_cast<size_t>(a)] + r * M.dims(t) + c;
                for (int k = 0; k < M.dims(h); ++k)
                    if (pm(k, c)) d(row, fidx(h, r, k)) += pm(k, c);
                for (int k = 0; k < N.dims(t); ++k)
                    if (pn(r, k)) d(row, fidx(t, k, c)) -= pn(r, k);
            }
    }
    return {d, source, target};
}

std::mutex table_mutex;
std::map<std::string, Eigen::MatrixXi> table_cache;

// dhom between interval modules, indexed like lace_order.
const Eigen::MatrixXi& hom_table(const LineOrientation& o) {
    std::lock_guard<std::mutex> lock(table_mutex);
    std::string key = std::to_string(o.size()) + ":" + o.pattern();
    auto it = table_cache.find(key);
    if (it != table_cache.end()) return it->second;
    std::vector<Interval> ord = lace_order(o.size());
    std::vector<NormalForm> mods;
    for (const Interval& r : ord) mods.push_back(interval_module(o, r));
    Eigen::MatrixXi t(static_cast<long>(ord.size()), static_cast<long>(ord.size()));
    for (size_t i = 0; i < ord.size(); ++i)
        for (size_t j = 0; j < ord.size(); ++j) t(static_cast<long>(i), static_cast<long>(j)) = dhom(o, mods[i], mods[j]);
    return table_cache.emplace(key, t).first->second;
}

}  // namespace

int dhom(const LineOrientation& o, const NormalForm& M, const NormalForm& N) {
    Differential d = ringel(o, M, N);
    return d.source - exact_rank(d.matrix);
}

int dext(const LineOrientation& o, const NormalForm& M, const NormalForm& N) {
    Differential d = ringel(o, M, N);
    return d.target - exact_rank(d.matrix);
}

int dhom(const LineOrientation& o, const Interval& r1, const Interval& r2) {
    return dhom(o, interval_module(o, r1), interval_module(o, r2));
}

int dext(const LineOrientation& o, const Interval& r1, const Interval& r2) {
    return dext(o, interval_module(o, r1), interval_module(o, r2));
}

int codim_orbit(const LineOrientation& o, const KostantPartition& kp) {
    const Eigen::MatrixXi& t = hom_table(o);
    Eigen::VectorXi m = Eigen::Map<const Eigen::VectorXi>(kp.mult.data(), static_cast<long>(kp.mult.size()));
    DimVector g = kp.dimension();
    return m.dot(t * m) - euler_form(o.quiver(), g, g);
}

int codim_orbit_oracle(const LineOrientation& o, const KostantPartition& kp) {
    NormalForm nf = normal_form(o, kp);
    Differential d = ringel(o, nf, nf);
    return d.target - exact_rank(d.matrix);
}

int codim_stratum(const GridQuiver& gq, const Stratum& s) {
    int c = 0;
    for (size_t i = 0; i < s.parts.size(); ++i)
        c += codim_orbit(line_orientation(gq, s.axis, static_cast<int>(i) + 1), s.parts[i]);
    return c;
}

QSeries poincare_stratum(const Stratum& s, int hi) {
    QSeries p = QSeries::one(hi);
    for (const auto& kp : s.parts)
        for (int m : kp.mult)
            if (m > 0) p = p * poincare_P(m, hi);
    return p;
}

namespace {

template <class F>
int adjacent_pair_sum(const GridQuiver& gq, const Stratum& s, F weight) {
    int total = 0;
    for (size_t i = 0; i + 1 < s.parts.size(); ++i) {
        int N = s.parts[i].N;
        std::vector<Interval> ord = lace_order(N);
        for (size_t a = 0; a < ord.size(); ++a) {
            int ma = s.parts[i].mult[a];
            if (!ma) continue;
            for (size_t b = 0; b < ord.size(); ++b) {
                int mb = s.parts[i + 1].mult[b];
                if (!mb) continue;
                GridRoot ra{s.axis, static_cast<int>(i) + 1, ord[a].k, ord[a].l};
                GridRoot rb{s.axis, static_cast<int>(i) + 2, ord[b].k, ord[b].l};
                total += weight(gq, ra, rb) * ma * mb;
            }
        }
    }
    return total;
}

}  // namespace

int w_shift(const GridQuiver& gq, const Stratum& s) {
    return adjacent_pair_sum(gq, s, [](const GridQuiver& q, const GridRoot& a, const GridRoot& b) { return sc(q, a, b); });
}

int c_eta(const GridQuiver& gq, const Stratum& s) {
    return adjacent_pair_sum(gq, s, [](const GridQuiver&, const GridRoot& a, const GridRoot& b) { return r_floor(a, b); });
}

std::vector<StratumData> stratum_table(const GridQuiver& gq, const DimVector& g, Axis axis) {
    std::vector<StratumData> rows;
    for (Stratum& s : enumerate_strata(gq, g, axis)) {
        StratumData d{s, codim_stratum(gq, s), w_shift(gq, s), {}};
        for (const auto& kp : s.parts)
            for (int m : kp.mult) {
                if (m >= static_cast<int>(d.p_powers.size())) d.p_powers.resize(static_cast<size_t>(m) + 1, 0);
                if (m > 0) ++d.p_powers[static_cast<size_t>(m)];
            }
        rows.push_back(std::move(d));
    }
    std::stable_sort(rows.begin(), rows.end(), [](const StratumData& a, const StratumData& b) {
        if (a.codim != b.codim) return a.codim < b.codim;
        return a.w > b.w;
    });
    return rows;
}

QSeries geometric_sum(const GridQuiver& gq, const DimVector& g, Axis axis, int hi) {
    QSeries total = QSeries::zero(hi);
    for (const StratumData& d : stratum_table(gq, g, axis))
        total += shift(poincare_stratum(d.stratum, hi), 2 * (d.w + d.codim)).truncated(hi);
    return total;
}

}  // namespace qdilog
