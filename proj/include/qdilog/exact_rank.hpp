#pragma once

#include <Eigen/Core>

namespace qdilog {

// Rank over the rationals, by fraction-free elimination.
int exact_rank(const Eigen::MatrixXi& m);

}  // namespace qdilog
