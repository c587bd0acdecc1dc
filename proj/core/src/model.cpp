#include "gqi/model.hpp"

#include <cmath>
#include <complex>

namespace gqi {

Qcm tmsv(double s_db) {
  if (s_db < 0.0) throw InvalidInputError("tmsv: squeezing must be >= 0 dB");
  const double r = squeeze_param(s_db);
  const double c = std::cosh(2.0 * r);
  const double s = std::sinh(2.0 * r);
  // Global XpBlock rows: (x_A, x_B, p_A, p_B).
  Eigen::MatrixXd V(4, 4);
  V << c, s, 0, 0,
       s, c, 0, 0,
       0, 0, c, -s,
       0, 0, -s, c;
  return Qcm(V, Partition{{"A", 1}, {"B", 1}});
}

Qcm pure_loss_state(double lambda, double s_db) {
  if (lambda < 0.0 || lambda > 1.0) {
    throw InvalidInputError("pure_loss_state: lambda must be in [0, 1]");
  }
  if (s_db < 0.0) throw InvalidInputError("pure_loss_state: squeezing must be >= 0 dB");
  const double r = squeeze_param(s_db);
  const double c = std::cosh(2.0 * r);
  const double s = std::sinh(2.0 * r);
  const double a = lambda * c + 1.0 - lambda;
  const double k = std::sqrt(lambda) * s;
  Eigen::MatrixXd V(4, 4);
  V << a, k, 0, 0,
       k, c, 0, 0,
       0, 0, a, -k,
       0, 0, -k, c;
  return Qcm(V, Partition{{"A", 1}, {"B", 1}});
}

double GaussianChannel::cp_violation() const {
  if (Y.rows() != Y.cols() || Y.rows() != X.rows() || X.rows() % 2 != 0 ||
      X.cols() % 2 != 0) {
    throw InvalidShapeError("GaussianChannel: inconsistent X/Y dimensions");
  }
  const std::complex<double> i1(0.0, 1.0);
  const Eigen::MatrixXcd H =
      Y.cast<std::complex<double>>() +
      i1 * omega(out_modes()).cast<std::complex<double>>() -
      i1 * (X * omega(in_modes()) * X.transpose()).cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (H + H.adjoint()),
                                                     Eigen::EigenvaluesOnly);
  return std::max(0.0, -es.eigenvalues().minCoeff());
}

void GaussianChannel::require_cp(double tol) const {
  if (cp_violation() > tol) {
    throw ChannelError("Gaussian channel violates complete positivity");
  }
}

GaussianChannel GaussianChannel::compose(const GaussianChannel& inner) const {
  if (in_modes() != inner.out_modes()) {
    throw InvalidShapeError("GaussianChannel::compose: mode mismatch");
  }
  return {X * inner.X, X * inner.Y * X.transpose() + Y};
}

GaussianChannel GaussianChannel::identity(int modes) {
  return {Eigen::MatrixXd::Identity(2 * modes, 2 * modes),
          Eigen::MatrixXd::Zero(2 * modes, 2 * modes)};
}

GaussianChannel GaussianChannel::pure_loss(double lambda) {
  if (lambda < 0.0 || lambda > 1.0) {
    throw InvalidInputError("pure_loss: lambda must be in [0, 1]");
  }
  return {std::sqrt(lambda) * Eigen::MatrixXd::Identity(2, 2),
          (1.0 - lambda) * Eigen::MatrixXd::Identity(2, 2)};
}

Qcm channel_apply(const GaussianChannel& ch, const Qcm& V,
                  const std::string& subsystem, const std::string& new_name) {
  ch.require_cp();
  if (ch.in_modes() != V.partition.modes_of(subsystem)) {
    throw InvalidShapeError("channel_apply: channel input modes do not match '" +
                            subsystem + "'");
  }
  // Output partition: same subsystems, target replaced (possibly renamed).
  std::vector<Subsystem> subs;
  for (const auto& s : V.partition.subsystems()) {
    if (s.name == subsystem) {
      subs.push_back({new_name.empty() ? s.name : new_name, ch.out_modes()});
    } else {
      subs.push_back(s);
    }
  }
  Partition out_part{subs};

  const int m_in = V.modes();
  const int m_out = out_part.total_modes();
  // Global X: identity on untouched modes, ch.X on the target block.
  Eigen::MatrixXd Xg = Eigen::MatrixXd::Zero(2 * m_out, 2 * m_in);
  Eigen::MatrixXd Yg = Eigen::MatrixXd::Zero(2 * m_out, 2 * m_out);
  int off_in = 0, off_out = 0;
  for (const auto& s : V.partition.subsystems()) {
    if (s.name == subsystem) {
      const int ki = ch.in_modes(), ko = ch.out_modes();
      for (int i = 0; i < 2 * ko; ++i) {
        const int gi = (i < ko) ? off_out + i : m_out + off_out + (i - ko);
        for (int j = 0; j < 2 * ki; ++j) {
          const int gj = (j < ki) ? off_in + j : m_in + off_in + (j - ki);
          Xg(gi, gj) = ch.X(i, j);
        }
        for (int j = 0; j < 2 * ko; ++j) {
          const int gj = (j < ko) ? off_out + j : m_out + off_out + (j - ko);
          Yg(gi, gj) = ch.Y(i, j);
        }
      }
      off_in += ki;
      off_out += ko;
    } else {
      for (int k = 0; k < s.modes; ++k) {
        Xg(off_out + k, off_in + k) = 1.0;
        Xg(m_out + off_out + k, m_in + off_in + k) = 1.0;
      }
      off_in += s.modes;
      off_out += s.modes;
    }
  }
  Eigen::MatrixXd W = Xg * V.matrix * Xg.transpose() + Yg;
  return Qcm(0.5 * (W + W.transpose()), std::move(out_part));
}

Qcm channel_apply(const GaussianChannel& ch, const Qcm& V) {
  ch.require_cp();
  if (ch.in_modes() != V.modes()) {
    throw InvalidShapeError("channel_apply: channel input modes do not match state");
  }
  Eigen::MatrixXd W = ch.X * V.matrix * ch.X.transpose() + ch.Y;
  Partition part = (ch.out_modes() == V.modes())
                       ? V.partition
                       : Partition{{"A", ch.out_modes()}};
  return Qcm(0.5 * (W + W.transpose()), std::move(part));
}

Qcm purify(const Qcm& V, const std::string& env_name) {
  V.require_bona_fide();
  if (V.partition.has(env_name)) {
    throw PartitionError("purify: environment name '" + env_name +
                         "' already present");
  }
  const int m = V.modes();
  const auto wd = williamson(V.matrix);
  // gamma0 on (system, env): diagonal blocks diag(nu,nu); coupling
  // sqrt(nu^2-1) on x-x, -sqrt(nu^2-1) on p-p, mode j to env mode j.
  const int M = 2 * m;  // total modes of the purification
  Eigen::MatrixXd g0 = Eigen::MatrixXd::Zero(2 * M, 2 * M);
  for (int j = 0; j < m; ++j) {
    const double nu = wd.nu(j);
    const double c = std::sqrt(std::max(0.0, nu * nu - 1.0));
    const int xs = j, ps = M + j;          // system rows
    const int xe = m + j, pe = M + m + j;  // env rows
    g0(xs, xs) = nu;
    g0(ps, ps) = nu;
    g0(xe, xe) = nu;
    g0(pe, pe) = nu;
    g0(xs, xe) = g0(xe, xs) = c;
    g0(ps, pe) = g0(pe, ps) = -c;
  }
  // Congruence by S ⊕ 1_E in the combined XpBlock layout.
  Eigen::MatrixXd T = Eigen::MatrixXd::Identity(2 * M, 2 * M);
  for (int i = 0; i < 2 * m; ++i) {
    const int gi = (i < m) ? i : M + (i - m);
    for (int j = 0; j < 2 * m; ++j) {
      const int gj = (j < m) ? j : M + (j - m);
      T(gi, gj) = wd.S(i, j);
    }
    // Clear the embedded identity diagonal that T started with.
  }
  // (The identity entries T(gi, gi) are overwritten above for system rows.)
  Eigen::MatrixXd G = T * g0 * T.transpose();
  std::vector<Subsystem> subs = V.partition.subsystems();
  subs.push_back({env_name, m});
  return Qcm(0.5 * (G + G.transpose()), Partition{subs});
}

Eigen::MatrixXd homodyne_seed(double t, int modes) {
  if (!(t > 0.0)) throw InvalidInputError("homodyne_seed: t must be positive");
  Eigen::VectorXd d(2 * modes);
  d.head(modes).setConstant(t);
  d.tail(modes).setConstant(1.0 / t);
  return d.asDiagonal();
}

Qcm add_seed(const Qcm& V, const std::string& subsystem,
             const Eigen::MatrixXd& seed) {
  const int k = V.partition.modes_of(subsystem);
  if (seed.rows() != 2 * k || seed.cols() != 2 * k) {
    throw InvalidShapeError("add_seed: seed dimension does not match subsystem");
  }
  const auto idx = V.partition.xp_indices({subsystem});
  Eigen::MatrixXd M = V.matrix;
  for (int i = 0; i < 2 * k; ++i) {
    for (int j = 0; j < 2 * k; ++j) {
      M(idx[i], idx[j]) += seed(i, j);
    }
  }
  return Qcm(std::move(M), V.partition);
}

}  // namespace gqi
