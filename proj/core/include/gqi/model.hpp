#pragma once

#include <string>

#include <Eigen/Dense>

#include "gqi/qcm.hpp"

namespace gqi {

// Squeezing parameter r_s for s in dB.
inline double squeeze_param(double s_db) { return s_db * std::log(10.0) / 20.0; }

// Two-mode squeezed vacuum tau_s on partition (A:1, B:1).
Qcm tmsv(double s_db);

// State of a TMSV after a pure-loss channel of transmissivity lambda on A:
// A-block (lambda*cosh2r + 1 - lambda) I, B-block cosh2r I, coupling
// sqrt(lambda) sinh2r sigma_z.
Qcm pure_loss_state(double lambda, double s_db);

// Gaussian channel V -> X V X^T + Y, XpBlock ordering.
struct GaussianChannel {
  Eigen::MatrixXd X;  // 2m' x 2m
  Eigen::MatrixXd Y;  // 2m' x 2m', symmetric PSD

  int in_modes() const { return static_cast<int>(X.cols()) / 2; }
  int out_modes() const { return static_cast<int>(X.rows()) / 2; }

  // Largest violation of the complete-positivity condition
  // Y + i*Omega_out - i*X*Omega_in*X^T >= 0.
  double cp_violation() const;
  void require_cp(double tol = 1e-9) const;

  // this after inner.
  GaussianChannel compose(const GaussianChannel& inner) const;

  static GaussianChannel identity(int modes);
  static GaussianChannel pure_loss(double lambda);
};

// Apply ch to the named subsystem of V (identity elsewhere). The transformed
// subsystem keeps its name unless new_name is non-empty.
Qcm channel_apply(const GaussianChannel& ch, const Qcm& V,
                  const std::string& subsystem,
                  const std::string& new_name = "");

// Apply ch to the full system of V.
Qcm channel_apply(const GaussianChannel& ch, const Qcm& V);

// Minimal Gaussian purification: for V on m modes, returns a pure QCM on the
// original subsystems plus an m-mode environment env_name whose block over the
// original subsystems equals V.
Qcm purify(const Qcm& V, const std::string& env_name = "E");

// Homodyne seed diag(t*1, (1/t)*1) in xp blocks; pure for every t > 0.
Eigen::MatrixXd homodyne_seed(double t, int modes);

// V + (seed embedded on the named subsystem). seed is 2k x 2k XpBlock for the
// subsystem's k modes.
Qcm add_seed(const Qcm& V, const std::string& subsystem,
             const Eigen::MatrixXd& seed);

}  // namespace gqi
