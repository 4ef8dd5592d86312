#pragma once

#include "qdilog/qalgebra.hpp"
#include "qdilog/qseries.hpp"
#include "qdilog/quiver.hpp"
#include "qdilog/roots.hpp"
#include "qdilog/strata.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qdilog {

struct Counterexample {
    DimVector gamma;
    int exponent;  // power of t
    Int left;
    Int right;
};

// Outcome of one identity check.  A verdict certifies the identity only for
// dimension vectors inside `box` and t-powers up to `certified_window`.
struct Verdict {
    std::string identity;
    int n = 0;
    int nprime = 0;
    DimVector box;
    int window = 0;
    bool pass = true;
    int certified_window = 0;
    std::optional<Counterexample> counterexample;
    std::string detail;
};

struct MtOptions {
    int random_orders = 0;  // extra random valid orders per side
    std::uint64_t seed = 1;
};

// Compares E(y_l1)...E(y_lk) with E(y_r1)...E(y_rm).
Verdict compare_products(const std::string& identity, const Quiver& q, const std::vector<DimVector>& left,
                         const std::vector<DimVector>& right, const DimVector& box, int hi);
// Compares the horizontal and vertical ordered products.
Verdict compare_orders(const GridQuiver& gq, const RootOrder& h, const RootOrder& v, const DimVector& box, int hi);
Verdict check_theorem_mt(int n, int nprime, const DimVector& box, int hi, const MtOptions& opt = {});

// The A2 quiver 2 -> 1, for which E(y1)E(y2) = E(y2)E(y12)E(y1).
Quiver pentagon_quiver();
// P_a P_b against sum over (m10, m01, m11) |- (a, b) of q^(m10 m01) P_m10 P_m01 P_m11.
Verdict check_pentagon_scalar(int a_max, int b_max, int hi);
Verdict check_pentagon(const DimVector& box, int hi);

// One side of the 55-term identity for the pairs (a1, a2) and (b1, b2).
QSeries keller_side(int a1, int a2, int b1, int b2, int hi);
Verdict check_55_keller(const DimVector& gamma, int hi);

// Coefficient of y_gamma predicted from the strata of one axis.
QSeries predicted_coefficient(const GridQuiver& gq, const DimVector& gamma, Axis axis, int hi);
Verdict coefficient_crosscheck(const GridQuiver& gq, const DimVector& gamma, Axis axis, const DimVector& box, int hi);

// Common value of both sides; throws Error if they differ.
AlgebraElement dt_invariant(int n, int nprime, const DimVector& box, int hi);

// Ordered y_v^gamma(v) factors for the given vertices.
std::vector<std::pair<DimVector, int>> vertex_powers(const GridQuiver& gq, const DimVector& gamma,
                                                     const std::vector<int>& vertices);
// y_HorH^gamma y_HorT^gamma as a single monomial.
Monomial head_tail_monomial(const GridQuiver& gq, const DimVector& gamma);
// Ordered y_beta^m_beta factors of a stratum, in the order given.
std::vector<std::pair<DimVector, int>> root_powers(const GridQuiver& gq, const RootOrder& ord, const Stratum& s);

// Reordering identities, each as an equality of monomials.
// Root powers of one row, in canonical order, equal (-1)^s t^(2p) y_HorH y_HorT.
bool row_codim_identity(const GridQuiver& gq, int row, const KostantPartition& kp);
// t^(2 up) y_HorH y_HorT is the product over rows of the row's head and tail
// parts; on the vertical axis the same holds with t^(2 left) and columns.
bool head_tail_split(const GridQuiver& gq, const DimVector& gamma, Axis axis);
// y_VerH y_VerT = t^(2(vip - hip)) y_HorH y_HorT
bool head_tail_switch(const GridQuiver& gq, const DimVector& gamma);
// For every stratum, the full ordered product of root powers is t^(2(down + w))
// (horizontal) or t^(2(right + w)) (vertical) times the line-by-line product.
bool reordering_shift(const GridQuiver& gq, const DimVector& gamma, Axis axis);

// reordering_shift with the order, root data and sc table computed once, for
// checking many dimension vectors on one grid.
class ReorderingCheck {
public:
    ReorderingCheck(const GridQuiver& gq, Axis axis);
    bool operator()(const DimVector& gamma) const;

private:
    struct Slot {
        int line;
        size_t lace;
        DimVector beta;
        Eigen::VectorXi lbeta;
    };
    GridQuiver gq_;
    Axis axis_;
    std::vector<Slot> slots_;
    std::vector<size_t> by_line_;
    std::vector<LineOrientation> orient_;
    size_t lace_size_ = 0;
    std::vector<std::vector<int>> sc_;  // sc_[i][a * lace_size_ + b], lines i+1 and i+2
};

// Per-stratum columns indexed by q-degree.  Figure layout holds the
// coefficients of q^w P_stratum (the column is drawn codim steps lower);
// shifted layout holds q^(w+codim) P_stratum so rows sum to the total.
enum class BettiLayout { Figure, Shifted };

struct BettiColumn {
    Axis axis;
    std::string id;
    int codim;
    int w;
    std::vector<Int> cells;
};

struct BettiTable {
    DimVector gamma;
    int window = 0;
    BettiLayout layout = BettiLayout::Figure;
    int degrees = 0;  // rows q^0 .. q^(degrees-1)
    std::vector<BettiColumn> columns;
    std::vector<Int> total;  // from the horizontal strata

    // Total of one axis at q^r, following the layout.
    Int axis_total(Axis axis, int r) const;
};

BettiTable betti_table(const GridQuiver& gq, const DimVector& gamma, int hi, BettiLayout layout = BettiLayout::Figure);

// The j-th terms of the two dilogarithm series, cross-multiplied after the
// substitution q^(1/2) -> -q^(-1/2).
bool involution_term_matches(int j);

}  // namespace qdilog
