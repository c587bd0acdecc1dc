#pragma once

#include <optional>
#include <utility>

#include "gqi/entanglement.hpp"
#include "gqi/qcm.hpp"

namespace gqi {

// A QCM is normal (for a given bipartition) when local symplectics alone can
// remove every x-p cross term, i.e. bring it to xp-form.
enum class NormalityCertificate {
  NormalByConstruction,  // pure or two-mode input: normality is a theorem
  NumericallyNormal,     // optimizer reached residual < 1e-7
  ObstructionFound,      // analytic commutator certificate of non-normality
  Inconclusive,
};

struct NormalityReport {
  double residual = 0.0;  // Frobenius norm of best achieved x-p cross block
  NormalityCertificate certificate = NormalityCertificate::Inconclusive;
  // (commutator norm of [FF^T, GG^T], |b1 - b2|) for the explicit family.
  std::optional<std::pair<double, double>> obstruction;
};

// Minimizes the x-p cross block of (S_A (+) S_B) V (S_A (+) S_B)^T over local
// symplectics on the two sides of the split. Never claims non-normality from
// the optimization alone.
NormalityReport is_normal(const Qcm& V, const Split& split,
                          const OptimOptions& opts = {});

// (1+2)-mode family with mode blocks [[a*1, F, G], [F^T, b1*1, 0],
// [G^T, 0, b2*1]] (subsystems A, B1, B2). When b1 != b2 and FF^T and GG^T do
// not commute, the state is provably non-normal for the A vs {B1, B2} split.
// Requires ||F||, ||G|| <= 1 (spectral norm), a >= 3, b1, b2 >= 2.
std::pair<Qcm, NormalityReport> non_normal_family(double a, double b1,
                                                  double b2,
                                                  const Eigen::Matrix2d& F,
                                                  const Eigen::Matrix2d& G);

struct StandardFormResult {
  Eigen::MatrixXd S_A;  // 2x2 local symplectics, acting on (x, p) of a mode
  Eigen::MatrixXd S_B;
  Qcm V_std;  // diag blocks a*1, b*1 and a diagonal (possibly signed) coupling
};

// Constructive two-mode standard form: single-mode Williamson on each
// marginal, then local rotations diagonalizing the coupling block.
StandardFormResult two_mode_standard_form(const Qcm& V);

}  // namespace gqi
