#pragma once

#include "qdilog/qseries.hpp"
#include "qdilog/quiver.hpp"
#include "qdilog/roots.hpp"
#include "qdilog/strata.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace qdilog {

// sign * t^tpow * y_gamma
struct Monomial {
    DimVector gamma;
    int sign = 1;
    int tpow = 0;
    bool operator==(const Monomial& b) const {
        return gamma == b.gamma && sign == b.sign && tpow == b.tpow;
    }
};

// y_g1 y_g2 = -t^lambda(g1,g2) y_(g1+g2) for nonzero g1, g2.
Monomial basis_product(const Quiver& q, const DimVector& g1, const DimVector& g2);
// Product of two monomials; y_0 is the unit.
Monomial monomial_mul(const Quiver& q, const Monomial& a, const Monomial& b);
// Running product of monomials y_g^e, multiplied on the right.  Uses
// y_g^e = (-1)^(e-1) y_(eg), which follows from lambda(g,g) = 0.
class MonomialAccumulator {
public:
    explicit MonomialAccumulator(const Quiver& q);
    void push(const DimVector& g, int e);
    // lg must equal lambda_matrix() * g.
    void push(const DimVector& g, const Eigen::VectorXi& lg, int e);
    Monomial value() const { return {gamma_, sign_, tpow_}; }
    const DimVector& gamma() const { return gamma_; }
    int sign() const { return sign_; }
    int tpow() const { return tpow_; }
    void reset();

private:
    const Quiver* q_;
    DimVector gamma_;
    int sign_ = 1;
    int tpow_ = 0;
    bool empty_ = true;
};

// The single monomial equal to the ordered product of y_(g_i)^(e_i).
Monomial monomial_product_scalar(const Quiver& q, const std::vector<std::pair<DimVector, int>>& seq);

// Element of the completed algebra truncated to the box {g : g <= box}.
// Cells are stored densely in mixed radix order (first vertex fastest).
class AlgebraElement {
public:
    explicit AlgebraElement(DimVector box);

    static AlgebraElement unit(const DimVector& box);
    static AlgebraElement from_monomial(const DimVector& box, const Monomial& m);

    const DimVector& box() const { return box_; }
    size_t size() const { return cells_.size(); }
    bool contains(const DimVector& g) const;
    size_t index(const DimVector& g) const;
    DimVector gamma(size_t idx) const;

    const QSeries& at(size_t idx) const { return cells_[idx]; }
    QSeries& at(size_t idx) { return cells_[idx]; }
    // Zero outside the box is not representable; callers check contains().
    const QSeries& coeff(const DimVector& g) const { return cells_[index(g)]; }
    void set(const DimVector& g, QSeries s) { cells_[index(g)] = std::move(s); }

    // Every coefficient is known through t^certified_window().
    int certified_window() const;
    AlgebraElement truncated(int hi) const;

private:
    DimVector box_;
    std::vector<size_t> stride_;
    std::vector<QSeries> cells_;
};

AlgebraElement mul(const Quiver& q, const AlgebraElement& a, const AlgebraElement& b);
// y_beta^j built by repeated multiplication.
AlgebraElement power(const Quiver& q, const DimVector& beta, int j, const DimVector& box, int hi);
// E(y_beta) = sum_j (-y_beta)^j t^(j^2) P_j
AlgebraElement dilog(const Quiver& q, const DimVector& beta, const DimVector& box, int hi);

// a <- a E(y_beta), every series capped at t^cap.
void multiply_by_dilog(const Quiver& q, AlgebraElement& a, const DimVector& beta, int cap);

// E(y_b1) ... E(y_bk), exact through t^hi.
AlgebraElement ordered_dilog_product(const Quiver& q, const std::vector<DimVector>& betas, const DimVector& box,
                                     int hi);
// Throws InvalidOrder unless the order passes validate_order.
AlgebraElement ordered_dilog_product(const GridQuiver& gq, const RootOrder& ord, const DimVector& box, int hi);

struct ElementDifference {
    DimVector gamma;
    SeriesDifference diff;
};

std::optional<ElementDifference> first_difference(const AlgebraElement& a, const AlgebraElement& b,
                                                  int upto = QSeries::kExact);

struct SiPi {
    int s = 0;
    int two_p = 0;  // p_i as a power of t
};

// s = sum m_b (|b| - 1), 2p = 2 codim + sum g(j)^2 - sum m_b^2
SiPi predict_si_pi(const LineOrientation& o, const KostantPartition& kp);

}  // namespace qdilog
