#pragma once

#include <cstdint>
#include <random>

#include "gqi/qcm.hpp"

namespace gqi {

using Rng = std::mt19937_64;

// Symmetric n x n with N(0, scale^2) entries (off-diagonals shared).
Eigen::MatrixXd random_symmetric(Rng& rng, int n, double scale = 1.0);

// Random symplectic exp(Omega K) with K symmetric, entries ~ N(0, scale^2).
Eigen::MatrixXd random_symplectic(Rng& rng, int modes, double scale = 0.35);

// Random pure QCM S S^T.
Eigen::MatrixXd random_pure_qcm_matrix(Rng& rng, int modes, double scale = 0.35);

// Random bona fide QCM S diag(nu,nu) S^T with nu_j in [nu_min, nu_max].
Qcm random_qcm(Rng& rng, const Partition& part, double squeeze_scale = 0.35,
               double nu_min = 1.05, double nu_max = 2.5);

// Random two-mode QCM on (A:1, B:1): a squeezed thermal state (two-mode
// squeezer applied to a thermal diagonal) followed by a random local
// symplectic congruence S_A ⊕ S_B.
Qcm random_two_mode_qcm(Rng& rng, double max_squeeze_db = 10.0,
                        double nu_max = 2.0);

// Block-diagonal S_A ⊕ S_B congruence matrix for the given partition split.
Eigen::MatrixXd random_local_symplectic(Rng& rng, const Partition& part,
                                        double scale = 0.35);

}  // namespace gqi
