#pragma once

#include <Eigen/Dense>

#include "gqi/types.hpp"

namespace gqi {

// Symplectic form Omega of m modes. In XpBlock ordering:
//   [[0, 1], [-1, 0]] (m x m identity blocks).
Eigen::MatrixXd omega(int modes, Ordering ordering = Ordering::XpBlock);

// Permutation P with  reorder(V, from, to) == P * V * P^T.
Eigen::MatrixXd ordering_permutation(int modes, Ordering from, Ordering to);

// Congruence by the ordering permutation; involutive.
Eigen::MatrixXd reorder(const Eigen::MatrixXd& V, Ordering from, Ordering to);

// || S Omega S^T - Omega ||_inf <= tol, in XpBlock ordering.
bool is_symplectic(const Eigen::MatrixXd& S, double tol = 1e-10);

// True when V has no x-p cross terms: Pi_x V Pi_p^T == 0 to tol.
bool is_xp_form(const Eigen::MatrixXd& V, double tol = 1e-12);

// The m positive eigenvalues of i*Omega*V, descending. V must be symmetric
// positive definite.
Eigen::VectorXd symplectic_eigenvalues(const Eigen::MatrixXd& V);

struct WilliamsonDecomposition {
  Eigen::MatrixXd S;   // symplectic
  Eigen::VectorXd nu;  // symplectic eigenvalues, descending

  // diag(nu, nu) in XpBlock ordering.
  Eigen::MatrixXd lambda() const;
  // Reconstruction S * lambda() * S^T.
  Eigen::MatrixXd reconstruct() const;
};

// V = S diag(nu,nu) S^T with S symplectic. For inputs already in xp-form the
// returned S lies in the GL-embedded subgroup diag(M, M^{-T}).
WilliamsonDecomposition williamson(const Eigen::MatrixXd& V);

// All symplectic eigenvalues within tol of 1 (equivalently det V = 1 and
// rk(V + i Omega) = m for bona fide V).
bool is_pure_qcm(const Eigen::MatrixXd& V, double tol = 1e-8);

}  // namespace gqi
