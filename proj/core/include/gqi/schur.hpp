#pragma once

#include <vector>

#include <Eigen/Dense>

#include "gqi/types.hpp"

namespace gqi {

// Schur complement R/X = Y - Z^T X^{-1} Z, where X = R[block, block] and the
// result lives on the complementary indices in their original relative order.
// Refuses blocks with condition number above cond_guard. Output symmetrized.
Eigen::MatrixXd schur_complement(const Eigen::MatrixXd& R,
                                 const std::vector<int>& block,
                                 double cond_guard = 1e12);

}  // namespace gqi
