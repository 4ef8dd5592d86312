#pragma once

#include "qdilog/quiver.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace qdilog {

enum class Axis { Horizontal, Vertical };

std::string to_string(Axis axis);
Axis parse_axis(const std::string& s);

// beta^(line)_{k,l}: the interval [k,l] on row `line` (horizontal) or column
// `line` (vertical).
struct GridRoot {
    Axis axis;
    int line;
    int k;
    int l;
    bool operator==(const GridRoot&) const = default;
    auto operator<=>(const GridRoot&) const = default;
};

// Number of lines and line length for an axis.
int line_count(const GridQuiver& gq, Axis axis);
int line_length(const GridQuiver& gq, Axis axis);
// Vertex id of position x (1-based) on a line.
int line_vertex(const GridQuiver& gq, Axis axis, int line, int x);

DimVector dim_vector(const GridQuiver& gq, const GridRoot& r);
std::vector<GridRoot> all_roots(const GridQuiver& gq, Axis axis);

struct Overlap {
    std::optional<std::pair<int, int>> span;
    int delta = 0;
    int size() const { return span ? span->second - span->first + 1 : 0; }
};

Overlap intersect(const GridRoot& r1, const GridRoot& r2);

using OrderMatrix = std::vector<std::vector<std::optional<GridRoot>>>;

// Whether the first vertex of a line is a sink of the line subquiver.
bool first_vertex_is_sink(const GridQuiver& gq, Axis axis, int line);
// (L+1) x L matrix for a line of length L; row index is rho.
OrderMatrix order_matrix(const GridQuiver& gq, Axis axis, int line);
OrderMatrix order_matrix(const GridQuiver& gq, int row);
int rho(const GridQuiver& gq, const GridRoot& r);

struct RootOrder {
    Axis axis;
    std::vector<GridRoot> sequence;
};

RootOrder canonical_order(const GridQuiver& gq, Axis axis);

struct OrderCheck {
    bool ok = true;
    // Positions (earlier, later) of the first offending pair.
    std::optional<std::pair<size_t, size_t>> violation;
};

OrderCheck validate_order(const GridQuiver& gq, const RootOrder& ord);
// Random topological sort of the precedence relation; every result passes
// validate_order.
RootOrder random_valid_order(const GridQuiver& gq, Axis axis, std::mt19937_64& rng);
// Same relative position for every pair with nonzero lambda.
bool equivalent_orders(const GridQuiver& gq, const RootOrder& a, const RootOrder& b);

// For vertical roots `up` counts leftward and `down` rightward arrows, so
// lambda(r1,r2) = down - up on both axes.
struct UpDown {
    int up = 0;
    int down = 0;
};

// Arrows joining r1's line to r2's line over the overlap of the intervals.
// Requires r1.line < r2.line; zero unless the lines are adjacent.
UpDown up_down_counts(const GridQuiver& gq, const GridRoot& r1, const GridRoot& r2);
int sc(const GridQuiver& gq, const GridRoot& r1, const GridRoot& r2);
// The same contribution written as up + lambda (lambda <= 0) or up.
int sc_restated(const GridQuiver& gq, const GridRoot& r1, const GridRoot& r2);
// Half the number of shared positions, rounded down.
int r_floor(const GridRoot& r1, const GridRoot& r2);

struct Signature {
    int pos = 0;
    int neg = 0;
    int zero = 0;
    bool operator==(const Signature&) const = default;
};

// Signature of the p x p form with 1/2 on the sub- and super-diagonal.
Signature tridiagonal_signature(int p);
Signature tridiagonal_signature_numeric(int p, double tol = 1e-9);

}  // namespace qdilog
