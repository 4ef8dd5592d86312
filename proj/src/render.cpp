#include "qdilog/render.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>

namespace qdilog {

namespace {

std::string qpow(int k) {
    if (k == 0) return "";
    if (k % 2 == 0) return k == 2 ? "q" : "q^" + std::to_string(k / 2);
    return "q^(" + std::to_string(k) + "/2)";
}

std::string multiplicities(const KostantPartition& kp) {
    std::vector<Interval> ord = lace_order(kp.N);
    std::string s;
    for (size_t i = 0; i < ord.size(); ++i) {
        if (!kp.mult[i]) continue;
        if (!s.empty()) s += ' ';
        s += "m" + std::to_string(ord[i].k);
        if (!ord[i].simple()) s += std::to_string(ord[i].l);
        s += "=" + std::to_string(kp.mult[i]);
    }
    return s.empty() ? "0" : s;
}

std::string poincare_factor(const StratumData& d) {
    std::string s;
    for (size_t j = d.p_powers.size(); j-- > 1;) {
        if (!d.p_powers[j]) continue;
        if (!s.empty()) s += ' ';
        s += "P" + std::to_string(j);
        if (d.p_powers[j] > 1) s += "^" + std::to_string(d.p_powers[j]);
    }
    return s.empty() ? "1" : s;
}

std::string pad(const std::string& s, size_t w) { return s.size() >= w ? s : std::string(w - s.size(), ' ') + s; }

}  // namespace

std::string format_series(const QSeries& s) {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < s.coeffs().size(); ++i) {
        const Int& c = s.coeffs()[i];
        if (c == 0) continue;
        int k = s.lo() + static_cast<int>(i);
        Int a = c < 0 ? Int(-c) : c;
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        std::string p = qpow(k);
        if (p.empty())
            out << a;
        else if (a == 1)
            out << p;
        else
            out << a << "*" << p;
        first = false;
    }
    if (first) out << "0";
    if (!s.exact()) out << " + O(" << (qpow(s.hi() + 1).empty() ? "1" : qpow(s.hi() + 1)) << ")";
    return out.str();
}

std::string format_dims(const DimVector& g, char sep) {
    std::string s;
    for (long i = 0; i < g.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(g(i));
    }
    return s;
}

std::string format_root(const GridRoot& r) {
    return (r.axis == Axis::Horizontal ? "H" : "V") + std::to_string(r.line) + "[" + std::to_string(r.k) + "," +
           std::to_string(r.l) + "]";
}

std::string format_factorization(const StratumData& d) {
    std::string s = qpow(2 * (d.w + d.codim));
    std::string p = poincare_factor(d);
    if (s.empty()) return p;
    return p == "1" ? s : s + " " + p;
}

Json int_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

Json series_json(const QSeries& s) {
    Json j;
    j["lo"] = s.is_zero() ? 0 : s.lo();
    j["hi"] = s.exact() ? Json(nullptr) : Json(s.hi());
    Json c = Json::array();
    for (const Int& x : s.coeffs()) c.push_back(int_json(x));
    j["coeffs"] = c;
    return j;
}

Json quiver_json(const GridQuiver& gq) {
    Json j;
    j["n"] = gq.n();
    j["nprime"] = gq.nprime();
    Json arrows = Json::array();
    for (const Arrow& a : gq.quiver().arrows()) {
        auto [ti, tj] = gq.coord(a.tail);
        auto [hi, hj] = gq.coord(a.head);
        arrows.push_back({{ti, tj}, {hi, hj}});
    }
    j["arrows"] = arrows;
    auto coords = [&](const std::vector<int>& vs) {
        Json out = Json::array();
        for (int v : vs) {
            auto [i, jj] = gq.coord(v);
            out.push_back({i, jj});
        }
        return out;
    };
    j["classes"] = {{"HorH", coords(gq.hor_heads())}, {"HorT", coords(gq.hor_tails())}};
    return j;
}

Json root_json(const GridRoot& r) {
    return {{"axis", to_string(r.axis)}, {"line", r.line}, {"k", r.k}, {"l", r.l}};
}

Json element_json(const AlgebraElement& a) {
    Json j = Json::object();
    for (size_t i = 0; i < a.size(); ++i) {
        const QSeries& s = a.at(i);
        if (s.is_zero() && s.exact()) continue;
        j[format_dims(a.gamma(i))] = series_json(s);
    }
    return j;
}

Json verdict_json(const Verdict& v) {
    Json j;
    j["identity"] = v.identity;
    j["params"] = {{"n", v.n}, {"nprime", v.nprime}, {"box", format_dims(v.box)}, {"window", v.window}};
    j["result"] = v.pass ? "pass" : "fail";
    j["certified_window"] = v.certified_window;
    if (v.counterexample) {
        const Counterexample& c = *v.counterexample;
        j["counterexample"] = {{"gamma", format_dims(c.gamma)},
                               {"exponent", c.exponent},
                               {"left", int_json(c.left)},
                               {"right", int_json(c.right)}};
        j["detail"] = v.detail;
    }
    return j;
}

std::string verdict_pretty(const Verdict& v) {
    std::ostringstream out;
    out << v.identity << ": " << (v.pass ? "PASS" : "FAIL");
    if (v.n) out << "  n=" << v.n << " n'=" << v.nprime;
    out << "  box=(" << format_dims(v.box) << ") window=t^" << v.window << " certified=t^" << v.certified_window;
    if (v.counterexample) {
        const Counterexample& c = *v.counterexample;
        out << "\n  " << v.detail << ": gamma=(" << format_dims(c.gamma) << ") at t^" << c.exponent << ": " << c.left
            << " != " << c.right;
    }
    return out.str();
}

Json betti_json(const BettiTable& t) {
    Json j;
    j["gamma"] = format_dims(t.gamma);
    j["window"] = t.window;
    j["layout"] = t.layout == BettiLayout::Figure ? "figure" : "shifted";
    Json cols = Json::array();
    for (const BettiColumn& c : t.columns) {
        Json cells = Json::array();
        for (const Int& x : c.cells) cells.push_back(int_json(x));
        cols.push_back({{"id", c.id}, {"axis", to_string(c.axis)}, {"codim", c.codim}, {"w", c.w}, {"cells", cells}});
    }
    j["columns"] = cols;
    Json total = Json::array();
    for (const Int& x : t.total) total.push_back(int_json(x));
    j["total"] = total;
    return j;
}

std::string betti_csv(const BettiTable& t) {
    std::ostringstream out;
    out << "q";
    for (const BettiColumn& c : t.columns)
        if (c.axis == Axis::Horizontal) out << "," << c.id;
    out << ",total";
    for (const BettiColumn& c : t.columns)
        if (c.axis == Axis::Vertical) out << "," << c.id;
    out << "\n";
    for (int r = 0; r < t.degrees; ++r) {
        out << r;
        for (const BettiColumn& c : t.columns)
            if (c.axis == Axis::Horizontal) out << "," << c.cells[static_cast<size_t>(r)];
        out << "," << t.total[static_cast<size_t>(r)];
        for (const BettiColumn& c : t.columns)
            if (c.axis == Axis::Vertical) out << "," << c.cells[static_cast<size_t>(r)];
        out << "\n";
    }
    return out.str();
}

std::string betti_pretty(const BettiTable& t) {
    std::ostringstream out;
    const size_t w = 7;
    out << "gamma=(" << format_dims(t.gamma) << ")  "
        << (t.layout == BettiLayout::Figure ? "columns q^w P, drawn codim steps down" : "columns q^(w+codim) P")
        << "\n";
    auto header = [&](Axis axis) {
        for (const BettiColumn& c : t.columns)
            if (c.axis == axis) out << pad(c.id, w);
    };
    out << pad("q", 4);
    header(Axis::Horizontal);
    out << pad("total", w + 2);
    header(Axis::Vertical);
    out << "\n" << pad("", 4);
    for (const BettiColumn& c : t.columns) {
        if (c.axis == Axis::Vertical) continue;
        out << pad("c" + std::to_string(c.codim), w);
    }
    out << pad("", w + 2);
    for (const BettiColumn& c : t.columns)
        if (c.axis == Axis::Vertical) out << pad("c" + std::to_string(c.codim), w);
    out << "\n";
    for (int r = 0; r < t.degrees; ++r) {
        out << pad(std::to_string(r), 4);
        auto row = [&](Axis axis) {
            for (const BettiColumn& c : t.columns)
                if (c.axis == axis) out << pad(c.cells[static_cast<size_t>(r)].str(), w);
        };
        row(Axis::Horizontal);
        out << pad(t.total[static_cast<size_t>(r)].str(), w + 2);
        row(Axis::Vertical);
        out << "\n";
    }
    return out.str();
}

Json strata_json(const GridQuiver& gq, const DimVector& gamma, Axis axis) {
    Json rows = Json::array();
    int idx = 0;
    for (const StratumData& d : stratum_table(gq, gamma, axis)) {
        Json lines = Json::array();
        for (const KostantPartition& kp : d.stratum.parts) {
            Json m = Json::object();
            std::vector<Interval> ord = lace_order(kp.N);
            for (size_t i = 0; i < ord.size(); ++i)
                if (kp.mult[i]) m[std::to_string(ord[i].k) + "-" + std::to_string(ord[i].l)] = kp.mult[i];
            lines.push_back(m);
        }
        rows.push_back({{"id", (axis == Axis::Horizontal ? "H" : "V") + std::to_string(++idx)},
                        {"lines", lines},
                        {"codim", d.codim},
                        {"w", d.w},
                        {"poincare", poincare_factor(d)},
                        {"term", format_factorization(d)}});
    }
    return {{"axis", to_string(axis)}, {"gamma", format_dims(gamma)}, {"strata", rows}};
}

std::string strata_csv(const GridQuiver& gq, const DimVector& gamma, Axis axis) {
    std::ostringstream out;
    out << "id";
    for (int line = 1; line <= line_count(gq, axis); ++line) out << ",line" << line;
    out << ",codim,w,poincare\n";
    int idx = 0;
    for (const StratumData& d : stratum_table(gq, gamma, axis)) {
        out << (axis == Axis::Horizontal ? "H" : "V") << ++idx;
        for (const KostantPartition& kp : d.stratum.parts) out << "," << multiplicities(kp);
        out << "," << d.codim << "," << d.w << "," << poincare_factor(d) << "\n";
    }
    return out.str();
}

std::string strata_pretty(const GridQuiver& gq, const DimVector& gamma, Axis axis) {
    std::vector<StratumData> rows = stratum_table(gq, gamma, axis);
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head{"id"};
    for (int line = 1; line <= line_count(gq, axis); ++line)
        head.push_back((axis == Axis::Horizontal ? "row " : "col ") + std::to_string(line));
    head.insert(head.end(), {"codim", "w", "term"});
    cells.push_back(head);
    int idx = 0;
    for (const StratumData& d : rows) {
        std::vector<std::string> r{(axis == Axis::Horizontal ? "H" : "V") + std::to_string(++idx)};
        for (const KostantPartition& kp : d.stratum.parts) r.push_back(multiplicities(kp));
        r.push_back(std::to_string(d.codim));
        r.push_back(std::to_string(d.w));
        r.push_back(format_factorization(d));
        cells.push_back(r);
    }
    std::vector<size_t> width(head.size(), 0);
    for (const auto& r : cells)
        for (size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    std::ostringstream out;
    out << to_string(axis) << " strata of gamma=(" << format_dims(gamma) << ")\n";
    for (const auto& r : cells) {
        for (size_t c = 0; c < r.size(); ++c)
            out << r[c] << std::string(width[c] - r[c].size() + 2, ' ');
        out << "\n";
    }
    return out.str();
}

std::string roots_pretty(const GridQuiver& gq, Axis axis) {
    std::ostringstream out;
    RootOrder ord = canonical_order(gq, axis);
    out << to_string(axis) << " canonical order:";
    for (const GridRoot& r : ord.sequence) out << " " << format_root(r);
    out << "\n";
    for (int line = 1; line <= line_count(gq, axis); ++line) {
        out << (axis == Axis::Horizontal ? "row " : "column ") << line << " order matrix (row index = rho):\n";
        for (const auto& row : order_matrix(gq, axis, line)) {
            out << " ";
            for (const auto& e : row)
                out << " " << std::setw(6) << (e ? std::to_string(e->k) + "," + std::to_string(e->l) : ".");
            out << "\n";
        }
    }
    return out.str();
}

std::string normal_form_pretty(const NormalForm& nf) {
    std::ostringstream out;
    out << "dims: " << format_dims(nf.dims) << "\n";
    for (size_t a = 0; a < nf.maps.size(); ++a) {
        const Eigen::MatrixXi& m = nf.maps[a];
        out << "M" << a + 1 << " (" << m.rows() << "x" << m.cols() << ")\n";
        for (long i = 0; i < m.rows(); ++i) {
            out << " ";
            for (long j = 0; j < m.cols(); ++j) out << " " << m(i, j);
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace qdilog
