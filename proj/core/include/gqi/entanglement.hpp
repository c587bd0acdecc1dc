#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gqi/infomeasures.hpp"
#include "gqi/model.hpp"
#include "gqi/qcm.hpp"

namespace gqi {

// Pure-QCM parametrization gamma = S S^T with S = exp(Omega K), K symmetric.
// theta packs the upper triangle of K; dimension m(2m+1).
struct PureQcmParam {
  int modes = 0;
  Eigen::VectorXd theta;

  static int dim(int modes) { return modes * (2 * modes + 1); }
  Eigen::MatrixXd symplectic() const;
  Eigen::MatrixXd qcm() const;
};

// Symmetric n x n from its packed upper triangle (row-major, n(n+1)/2 entries).
Eigen::MatrixXd symmetric_from_vector(const Eigen::VectorXd& v, int n);

struct OptimOptions {
  std::uint64_t seed = 0;
  int restarts = 8;
  int max_evals_per_stage = 2500;  // per barrier stage / per inner solve
  bool budget_exhausted_ok = true;
};

struct OptimizerResult {
  double value = 0.0;  // bits
  PureQcmParam argument;
  double feasibility_residual = 0.0;
  int restarts = 0;
  bool converged = false;
  std::map<std::string, double> diagnostics;
};

// Renyi-2 Gaussian entanglement of formation, primal route: minimize
// M(gamma_A) over pure gamma with i*Omega <= gamma <= V. Multi-start simplex
// search in the Williamson frame with a log-det barrier on the constraint;
// modes of V at symplectic eigenvalue 1 are provably vacuum-decoupled in any
// feasible pure gamma and are frozen out.
OptimizerResult reof_numeric(const Qcm& V, const Split& split,
                             const OptimOptions& opts = {});

// Closed form for the pure-loss family:
// log2[(1+(1+lambda)sinh^2 r_s)/(1+(1-lambda)sinh^2 r_s)].
double reof_closed_form(double lambda, double s_db);

// Dual (squashed) route: (1/2) inf over pure Gamma_E of I_M(A:B|E) on
// purify(V) + Gamma_E.
OptimizerResult reof_squashed(const Qcm& V, const Split& split,
                              const OptimOptions& opts = {});

struct GieResult {
  double lower = 0.0;
  double upper = 0.0;
  bool budget_exhausted = false;
  std::map<std::string, double> diagnostics;
};

// Gaussian intrinsic entanglement estimates. lower: best sup-inf value found
// (outer seeds on A and B including the homodyne family, inner minimization
// over Eve's seed). upper: inf-sup with Eve's seed pure, which collapses to
// the squashed route. Always lower <= upper (weak duality enforced).
GieResult gie_numeric(const Qcm& V, const Split& split,
                      const OptimOptions& opts = {});

// g(sinh^2 r_s) - g((1-lambda) sinh^2 r_s).
double one_way_distillable(double lambda, double s_db);

struct DegradabilityCertificate {
  double residual = 0.0;      // ||W_AE - gamma_AE||_inf
  double cp_margin = 0.0;     // sqrt(det Y) - (1 - |det X|)
  double cp_violation = 0.0;  // Hermitian CP condition violation
  GaussianChannel degrading;
};

// Builds the explicit degrading channel for the pure-loss family, certifies
// complete positivity, and checks that it maps Bob's side onto Eve's marginal.
DegradabilityCertificate degradability_certificate(double lambda, double s_db);

struct KeyBounds {
  double reof = 0.0;
  double one_way_bound = 0.0;  // = reof
  double two_way_bound = 0.0;  // = 2 * reof
  double glmpc_bound = 0.0;    // = reof
  double gie_lower = 0.0;
  bool used_closed_form = false;
};

KeyBounds key_bounds(const Qcm& V, const Split& split,
                     const OptimOptions& opts = {});

// Fit V against the pure-loss family; residual < 1e-9 accepted.
std::optional<std::pair<double, double>> fit_pure_loss(const Qcm& V);

struct CrossingAnalysis {
  double r0 = 0.0;        // root of cosh^2(r) ln coth(r) = 1
  double sinh2_r0 = 0.0;  // sinh^2(r0)
  double s0_db = 0.0;     // 20 r0 / ln 10
  std::vector<std::pair<double, double>> lambda0;  // (s_db, lambda0(s))
};

// Threshold squeezing s0 below which the closed-form bound stays under the
// one-way distillable entanglement for all lambda, and the crossing point
// lambda0(s) for each s > s0 in s_list.
CrossingAnalysis crossing_analysis(
    const std::vector<double>& s_list = {5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15});

// Crossing transmissivity where the closed forms meet, for s > s0.
double lambda0_of(double s_db);

// |reof_numeric(V^{⊕n}) - n * reference value|; reference is the closed form
// when V fits the pure-loss family, else reof_numeric(V).
double additivity_check(const Qcm& V, const Split& split, int n,
                        const OptimOptions& opts = {});

// |gie upper - gie lower| at the given budget.
double saddle_check(const Qcm& V, const Split& split,
                    const OptimOptions& opts = {});

}  // namespace gqi
