#include "gqi/schur.hpp"

#include <algorithm>
#include <set>

namespace gqi {

Eigen::MatrixXd schur_complement(const Eigen::MatrixXd& R,
                                 const std::vector<int>& block,
                                 double cond_guard) {
  const int n = static_cast<int>(R.rows());
  if (R.cols() != n) throw InvalidShapeError("schur_complement: matrix not square");
  std::set<int> in_block;
  for (int i : block) {
    if (i < 0 || i >= n) throw InvalidInputError("schur_complement: index out of range");
    if (!in_block.insert(i).second) {
      throw InvalidInputError("schur_complement: duplicate index in block");
    }
  }
  if (in_block.empty() || static_cast<int>(in_block.size()) == n) {
    throw InvalidInputError("schur_complement: block must be a proper nonempty subset");
  }

  std::vector<int> rest;
  for (int i = 0; i < n; ++i) {
    if (!in_block.count(i)) rest.push_back(i);
  }
  const int k = static_cast<int>(block.size());
  const int r = static_cast<int>(rest.size());

  Eigen::MatrixXd X(k, k), Y(r, r), Z(k, r);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) X(i, j) = R(block[i], block[j]);
    for (int j = 0; j < r; ++j) Z(i, j) = R(block[i], rest[j]);
  }
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) Y(i, j) = R(rest[i], rest[j]);
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(X, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double smax = svd.singularValues()(0);
  const double smin = svd.singularValues()(k - 1);
  const double cond = (smin > 0.0) ? smax / smin
                                   : std::numeric_limits<double>::infinity();
  if (!(cond < cond_guard)) {
    throw SingularBlockError("schur_complement: block condition number " +
                                 std::to_string(cond) + " exceeds guard",
                             cond);
  }

  const Eigen::MatrixXd out = Y - Z.transpose() * svd.solve(Z);
  return 0.5 * (out + out.transpose());
}

}  // namespace gqi
