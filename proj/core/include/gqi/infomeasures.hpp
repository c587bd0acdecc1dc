#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gqi/qcm.hpp"

namespace gqi {

// Bipartition of a Qcm's subsystems by name.
struct Split {
  std::vector<std::string> a;
  std::vector<std::string> b;
};

struct MeasureValue {
  double value = 0.0;  // bits
  std::map<std::string, double> diagnostics;
};

// (1/2) log2 det M via Cholesky log-pivots; throws InvalidInputError if M is
// not positive definite.
double half_log2_det(const Eigen::MatrixXd& M);

// Renyi-2 entropy M(V) = (1/2) log2 det V.
double logdet_entropy(const Eigen::MatrixXd& V);
double logdet_entropy(const Qcm& V);

// Bosonic entropy function g(x) = (x+1)log2(x+1) - x log2 x, g(0) = 0.
double bosonic_g(double x);

// sum_j g((nu_j - 1)/2) over the symplectic eigenvalues.
double von_neumann_entropy(const Eigen::MatrixXd& V);
double von_neumann_entropy(const Qcm& V);

// I_M on a plain matrix whose index set is exactly idx_a ∪ idx_b:
// (1/2) log2( det M[a] det M[b] / det M ).
double im_mutual_idx(const Eigen::MatrixXd& M, const std::vector<int>& idx_a,
                     const std::vector<int>& idx_b);

// I_M(A:B) = M(V_A) + M(V_B) - M(V_AB); the split must cover the partition.
double im_mutual(const Qcm& V, const Split& split);

// I_M(A:B|E), computed both as the direct determinant ratio and as I_M of the
// Schur complement V/V_E; the two routes are compared in diagnostics
// ("route_disagreement") and must agree to 1e-8.
MeasureValue im_conditional(const Qcm& V, const Split& split,
                            const std::vector<std::string>& cond);

// (I_M(A_x:B_x)_{V^x}, I_M(A_p:B_p)_{V/V^x}); the parts sum to im_mutual.
std::pair<double, double> im_xp_decompose(const Qcm& V, const Split& split);

// Evaluates I_M of V + Gamma_A(t) ⊕ Gamma_B(t) along a decreasing schedule and
// extrapolates the t -> 0+ limit I_M(A_x:B_x)_{V^x}. The deviation is O(t), so
// order-1 Richardson extrapolation on the last two points is used.
// diagnostics: per-schedule values, extrapolation error estimate.
MeasureValue homodyne_limit_im(
    const Qcm& V, const Split& split,
    const std::vector<double>& schedule = {1e-1, 1e-2, 1e-3, 1e-4});

// Trace norm of a symmetric matrix (sum of absolute eigenvalues).
double trace_norm(const Eigen::MatrixXd& M);

}  // namespace gqi
