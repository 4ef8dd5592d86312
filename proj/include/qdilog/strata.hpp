#pragma once

#include "qdilog/qseries.hpp"
#include "qdilog/quiver.hpp"
#include "qdilog/roots.hpp"

#include <string>
#include <vector>

namespace qdilog {

// Orientation of A_N; arrow a (0-based) joins positions a and a+1 and points
// right when rightward[a] holds.
struct LineOrientation {
    std::vector<bool> rightward;

    int size() const { return static_cast<int>(rightward.size()) + 1; }
    Quiver quiver() const;
    std::string pattern() const;
    // "rrl" is 1 -> 2 -> 3 <- 4.
    static LineOrientation parse(const std::string& pattern);
    bool operator==(const LineOrientation&) const = default;
};

LineOrientation line_orientation(const GridQuiver& gq, Axis axis, int line);
DimVector line_dims(const GridQuiver& gq, const DimVector& g, Axis axis, int line);

struct Interval {
    int k;
    int l;
    bool simple() const { return k == l; }
    bool operator==(const Interval&) const = default;
    auto operator<=>(const Interval&) const = default;
};

// Non-simple intervals in lexicographic order, then the simple ones.
std::vector<Interval> lace_order(int N);

struct KostantPartition {
    int N = 0;
    std::vector<int> mult;  // indexed like lace_order(N)

    int m(int k, int l) const;
    DimVector dimension() const;
    bool operator==(const KostantPartition&) const = default;
};

std::vector<KostantPartition> enumerate_kostant(const LineOrientation& o, const DimVector& g);

struct Stratum {
    Axis axis;
    std::vector<KostantPartition> parts;  // one per row or column
};

// Cartesian product over lines, first line outermost.
std::vector<Stratum> enumerate_strata(const GridQuiver& gq, const DimVector& g, Axis axis);

struct NormalForm {
    DimVector dims;
    std::vector<Eigen::MatrixXi> maps;  // one head x tail matrix per arrow
};

NormalForm normal_form(const LineOrientation& o, const KostantPartition& kp);
NormalForm interval_module(const LineOrientation& o, const Interval& r);

// dim Hom and dim Ext^1 between two representations of the same line quiver,
// from the rank of f -> (f_h phi_M - phi_N f_t).
int dhom(const LineOrientation& o, const NormalForm& M, const NormalForm& N);
int dext(const LineOrientation& o, const NormalForm& M, const NormalForm& N);
int dhom(const LineOrientation& o, const Interval& r1, const Interval& r2);
int dext(const LineOrientation& o, const Interval& r1, const Interval& r2);

// sum m_a m_b dhom(a,b) - chi(g,g)
int codim_orbit(const LineOrientation& o, const KostantPartition& kp);
// dim Rep - rank of the group action differential at the normal form.
int codim_orbit_oracle(const LineOrientation& o, const KostantPartition& kp);

int codim_stratum(const GridQuiver& gq, const Stratum& s);
QSeries poincare_stratum(const Stratum& s, int hi);
int w_shift(const GridQuiver& gq, const Stratum& s);
int c_eta(const GridQuiver& gq, const Stratum& s);

struct StratumData {
    Stratum stratum;
    int codim;
    int w;
    std::vector<int> p_powers;  // p_powers[j] = exponent of P_j in the Poincare series
};

// Strata sorted by codimension, then by decreasing w, then enumeration order.
std::vector<StratumData> stratum_table(const GridQuiver& gq, const DimVector& g, Axis axis);

// Sum over strata of q^(w+codim) P_stratum, known through t^hi.
QSeries geometric_sum(const GridQuiver& gq, const DimVector& g, Axis axis, int hi);

}  // namespace qdilog
