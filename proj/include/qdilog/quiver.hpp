#pragma once

#include <Eigen/Core>

#include <utility>
#include <vector>

namespace qdilog {

using DimVector = Eigen::VectorXi;

struct Arrow {
    int tail;
    int head;
    bool operator==(const Arrow&) const = default;
};

class Quiver {
public:
    Quiver() = default;
    Quiver(int vertex_count, std::vector<Arrow> arrows);

    int vertex_count() const { return vertex_count_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    // E with chi(a,b) = a^T E b.
    const Eigen::MatrixXi& euler_matrix() const { return euler_; }
    // L = E^T - E, so lambda(a,b) = a^T L b.
    const Eigen::MatrixXi& lambda_matrix() const { return lambda_; }

    DimVector zero() const { return DimVector::Zero(vertex_count_); }
    DimVector simple(int v, int mult = 1) const;

private:
    int vertex_count_ = 0;
    std::vector<Arrow> arrows_;
    Eigen::MatrixXi euler_;
    Eigen::MatrixXi lambda_;
};

int euler_form(const Quiver& q, const DimVector& g1, const DimVector& g2);
int lambda_form(const Quiver& q, const DimVector& g1, const DimVector& g2);
int tits_form(const Quiver& q, const DimVector& g);
bool is_root(const Quiver& q, const DimVector& g);

enum class VertexClass { HorH, HorT };

// The square product A_n [] A_n'.  Vertex (i,j), 1 <= i <= n, 1 <= j <= n',
// has id (i-1)*n' + (j-1).
class GridQuiver {
public:
    GridQuiver(int n, int nprime);

    int n() const { return n_; }
    int nprime() const { return nprime_; }
    const Quiver& quiver() const { return quiver_; }
    int vertex_count() const { return n_ * nprime_; }

    int id(int i, int j) const { return (i - 1) * nprime_ + (j - 1); }
    std::pair<int, int> coord(int v) const { return {v / nprime_ + 1, v % nprime_ + 1}; }

    // Horizontal heads are the sinks of their row; they coincide with the
    // vertical tails (sources of their column).
    VertexClass vertex_class(int v) const;
    std::vector<int> hor_heads() const;
    std::vector<int> hor_tails() const;
    std::vector<int> ver_heads() const { return hor_tails(); }
    std::vector<int> ver_tails() const { return hor_heads(); }

    bool has_arrow(int tail, int head) const;
    int square_count() const { return (n_ - 1) * (nprime_ - 1); }

private:
    int n_;
    int nprime_;
    Quiver quiver_;
};

GridQuiver square_product(int n, int nprime);

struct QuadraticForms {
    long up = 0;
    long down = 0;
    long left = 0;
    long right = 0;
    long hip = 0;
    long vip = 0;
    bool operator==(const QuadraticForms&) const = default;
};

// -up(g) is the sum of g(t)g(h) over upward arrows (head row above tail row);
// down, left and right likewise.  hip = -up - down, vip = -left - right.
QuadraticForms quadratic_forms(const GridQuiver& gq, const DimVector& g);

}  // namespace qdilog
