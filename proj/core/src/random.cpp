#include "gqi/random.hpp"

#include "gqi/model.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace gqi {

Eigen::MatrixXd random_symmetric(Rng& rng, int n, double scale) {
  std::normal_distribution<double> gauss(0.0, scale);
  Eigen::MatrixXd K(n, n);
  for (int i = 0; i < n; ++i) {
    K(i, i) = gauss(rng);
    for (int j = i + 1; j < n; ++j) {
      K(i, j) = K(j, i) = gauss(rng);
    }
  }
  return K;
}

Eigen::MatrixXd random_symplectic(Rng& rng, int modes, double scale) {
  const Eigen::MatrixXd K = random_symmetric(rng, 2 * modes, scale);
  return (omega(modes) * K).exp();
}

Eigen::MatrixXd random_pure_qcm_matrix(Rng& rng, int modes, double scale) {
  const Eigen::MatrixXd S = random_symplectic(rng, modes, scale);
  return S * S.transpose();
}

Qcm random_qcm(Rng& rng, const Partition& part, double squeeze_scale,
               double nu_min, double nu_max) {
  const int m = part.total_modes();
  std::uniform_real_distribution<double> uni(nu_min, nu_max);
  Eigen::VectorXd d(2 * m);
  for (int j = 0; j < m; ++j) {
    d(j) = uni(rng);
    d(m + j) = d(j);
  }
  const Eigen::MatrixXd S = random_symplectic(rng, m, squeeze_scale);
  Eigen::MatrixXd V = S * d.asDiagonal() * S.transpose();
  return Qcm(0.5 * (V + V.transpose()), part);
}

Qcm random_two_mode_qcm(Rng& rng, double max_squeeze_db, double nu_max) {
  std::uniform_real_distribution<double> s_dist(0.5, max_squeeze_db);
  std::uniform_real_distribution<double> nu_dist(1.05, nu_max);
  const double r = squeeze_param(s_dist(rng));
  const double ch = std::cosh(r), sh = std::sinh(r);
  // Two-mode squeezer in XpBlock rows (x_A, x_B, p_A, p_B).
  Eigen::MatrixXd S2(4, 4);
  S2 << ch, sh, 0, 0,
        sh, ch, 0, 0,
        0, 0, ch, -sh,
        0, 0, -sh, ch;
  Eigen::VectorXd d(4);
  const double n1 = nu_dist(rng), n2 = nu_dist(rng);
  d << n1, n2, n1, n2;
  Eigen::MatrixXd V = S2 * d.asDiagonal() * S2.transpose();

  const Partition part{{"A", 1}, {"B", 1}};
  const Eigen::MatrixXd L = random_local_symplectic(rng, part);
  V = L * V * L.transpose();
  return Qcm(0.5 * (V + V.transpose()), part);
}

Eigen::MatrixXd random_local_symplectic(Rng& rng, const Partition& part,
                                        double scale) {
  const int dim = part.dim();
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& s : part.subsystems()) {
    const Eigen::MatrixXd Sk = random_symplectic(rng, s.modes, scale);
    const auto idx = part.xp_indices({s.name});
    for (int i = 0; i < 2 * s.modes; ++i) {
      for (int j = 0; j < 2 * s.modes; ++j) {
        L(idx[i], idx[j]) = Sk(i, j);
      }
    }
  }
  return L;
}

}  // namespace gqi
