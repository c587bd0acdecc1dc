#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gqi/partition.hpp"
#include "gqi/symplectic.hpp"
#include "gqi/types.hpp"

namespace gqi {

// Quantum covariance matrix: 2m x 2m real symmetric in XpBlock ordering with a
// named mode partition. Bona fide when V + i*Omega >= 0.
struct Qcm {
  Eigen::MatrixXd matrix;
  Partition partition;

  Qcm() = default;
  Qcm(Eigen::MatrixXd m, Partition p);

  int modes() const { return partition.total_modes(); }
  int dim() const { return partition.dim(); }

  // Reduced state on the named subsystems (partial trace = block extraction).
  Qcm block(const std::vector<std::string>& names) const;

  // Largest violation of V + i*Omega >= 0 (0 when bona fide exactly).
  double bona_fide_violation() const;
  bool is_bona_fide(double tol = 1e-9) const;
  void require_bona_fide(double tol = 1e-9) const;

  bool is_pure(double tol = 1e-8) const;
};

// Direct sum. Subsystem names get deterministic suffixes "1"/"2" when the two
// partitions share any name.
Qcm direct_sum(const Qcm& a, const Qcm& b);

// n-fold direct sum with suffixes "1".."n".
Qcm direct_sum_power(const Qcm& a, int n);

// Post-measurement QCM: measure the subsystems named in gamma's partition with
// Gaussian seed gamma; returns (V + gamma ⊕ 0)/(V_meas + gamma) on the rest.
Qcm measurement_update(const Qcm& V, const Qcm& gamma);

}  // namespace gqi
