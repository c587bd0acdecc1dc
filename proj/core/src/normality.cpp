#include "gqi/normality.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "gqi/optim.hpp"
#include "gqi/random.hpp"

namespace gqi {

namespace {

Qcm cover_state(const Qcm& V, const Split& split) {
  std::vector<std::string> all = split.a;
  all.insert(all.end(), split.b.begin(), split.b.end());
  if (all.size() == V.partition.size() && V.partition.names() == all) return V;
  return V.block(all);
}

double cross_norm(const Eigen::MatrixXd& M) {
  const int m = static_cast<int>(M.rows()) / 2;
  return M.topRightCorner(m, m).norm();
}

// Embed a per-side transform (XpBlock rows of that side) into the full frame.
void embed_local(Eigen::MatrixXd& L, const Eigen::MatrixXd& Lk,
                 const std::vector<int>& idx) {
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      L(idx[i], idx[j]) = Lk(i, j);
    }
  }
}

}  // namespace

NormalityReport is_normal(const Qcm& V, const Split& split,
                          const OptimOptions& opts) {
  const Qcm W = cover_state(V, split);
  W.require_bona_fide(1e-8);

  NormalityReport report;
  if (split.a.size() == 1 && split.b.size() == 1 && W.modes() == 2 &&
      W.partition.modes_of(split.a[0]) == 1) {
    const auto sf = two_mode_standard_form(W);
    report.residual = cross_norm(sf.V_std.matrix);
    report.certificate = NormalityCertificate::NormalByConstruction;
    return report;
  }

  const auto idx_a = W.partition.xp_indices(split.a);
  const auto idx_b = W.partition.xp_indices(split.b);
  const int ma = static_cast<int>(idx_a.size()) / 2;
  const int mb = static_cast<int>(idx_b.size()) / 2;
  const int dim = W.dim();

  // Seed frame: Williamson on each marginal already removes the local cross
  // terms; for pure states it lands (up to degeneracy rotations) on the
  // two-mode-squeezed normal form.
  Eigen::MatrixXd T0 = Eigen::MatrixXd::Identity(dim, dim);
  embed_local(T0, williamson(submatrix(W.matrix, idx_a)).S.inverse(), idx_a);
  embed_local(T0, williamson(submatrix(W.matrix, idx_b)).S.inverse(), idx_b);
  const Eigen::MatrixXd V1 = T0 * W.matrix * T0.transpose();

  const int da = PureQcmParam::dim(ma);
  const int db = PureQcmParam::dim(mb);
  const Eigen::MatrixXd omega_a = omega(ma);
  const Eigen::MatrixXd omega_b = omega(mb);

  auto objective = [&](const Eigen::VectorXd& theta) -> double {
    if (theta.cwiseAbs().maxCoeff() > 20.0) {
      return std::numeric_limits<double>::infinity();
    }
    const Eigen::MatrixXd Sa =
        (omega_a * symmetric_from_vector(theta.head(da), 2 * ma)).exp();
    const Eigen::MatrixXd Sb =
        (omega_b * symmetric_from_vector(theta.tail(db), 2 * mb)).exp();
    Eigen::MatrixXd L = Eigen::MatrixXd::Identity(dim, dim);
    embed_local(L, Sa, idx_a);
    embed_local(L, Sb, idx_b);
    return cross_norm(L * V1 * L.transpose());
  };

  Rng rng(opts.seed);
  double best = objective(Eigen::VectorXd::Zero(da + db));
  for (int r = 0; r < std::max(1, opts.restarts); ++r) {
    Eigen::VectorXd theta = Eigen::VectorXd::Zero(da + db);
    if (r > 0) {
      std::normal_distribution<double> gauss(0.0, 0.2);
      for (int i = 0; i < da + db; ++i) theta(i) = gauss(rng);
    }
    NelderMeadOptions nm;
    nm.max_evals = opts.max_evals_per_stage;
    nm.init_step = 0.15;
    auto r1 = nelder_mead(objective, theta, nm);
    NelderMeadOptions nm2 = nm;
    nm2.init_step = 0.01;
    auto r2 = nelder_mead(objective, r1.x, nm2);
    best = std::min(best, r2.f);
  }
  report.residual = best;
  if (W.is_pure()) {
    report.certificate = NormalityCertificate::NormalByConstruction;
  } else if (best < 1e-7) {
    report.certificate = NormalityCertificate::NumericallyNormal;
  } else {
    report.certificate = NormalityCertificate::Inconclusive;
  }
  return report;
}

std::pair<Qcm, NormalityReport> non_normal_family(double a, double b1,
                                                  double b2,
                                                  const Eigen::Matrix2d& F,
                                                  const Eigen::Matrix2d& G) {
  const double nF = F.jacobiSvd().singularValues()(0);
  const double nG = G.jacobiSvd().singularValues()(0);
  if (nF > 1.0 + 1e-12 || nG > 1.0 + 1e-12) {
    throw InvalidInputError("non_normal_family: coupling norms must be <= 1");
  }
  if (a < 3.0 || b1 < 2.0 || b2 < 2.0) {
    throw InvalidInputError("non_normal_family: need a >= 3 and b1, b2 >= 2");
  }

  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(6, 6);  // ModeWise rows A, B1, B2
  M.block<2, 2>(0, 0) = a * Eigen::Matrix2d::Identity();
  M.block<2, 2>(2, 2) = b1 * Eigen::Matrix2d::Identity();
  M.block<2, 2>(4, 4) = b2 * Eigen::Matrix2d::Identity();
  M.block<2, 2>(0, 2) = F;
  M.block<2, 2>(2, 0) = F.transpose();
  M.block<2, 2>(0, 4) = G;
  M.block<2, 2>(4, 0) = G.transpose();

  const Partition part{{"A", 1}, {"B1", 1}, {"B2", 1}};
  Qcm V(reorder(M, Ordering::ModeWise, Ordering::XpBlock), part);
  V.require_bona_fide(1e-9);

  NormalityReport report;
  const Eigen::Matrix2d comm =
      F * F.transpose() * G * G.transpose() - G * G.transpose() * F * F.transpose();
  const double comm_norm = comm.norm();
  report.obstruction = std::make_pair(comm_norm, std::abs(b1 - b2));
  report.residual = cross_norm(V.matrix);
  if (std::abs(b1 - b2) > 1e-12 && comm_norm > 1e-9) {
    report.certificate = NormalityCertificate::ObstructionFound;
  } else {
    report.certificate = NormalityCertificate::Inconclusive;
  }
  return {V, report};
}

StandardFormResult two_mode_standard_form(const Qcm& V) {
  if (V.partition.size() != 2 || V.modes() != 2) {
    throw PartitionError("two_mode_standard_form: need a 1+1 mode bipartition");
  }
  V.require_bona_fide(1e-8);
  const auto names = V.partition.names();
  const auto idx_a = V.partition.xp_indices({names[0]});
  const auto idx_b = V.partition.xp_indices({names[1]});

  // Local Williamson: marginals become nu * identity.
  Eigen::MatrixXd Ta = williamson(submatrix(V.matrix, idx_a)).S.inverse();
  Eigen::MatrixXd Tb = williamson(submatrix(V.matrix, idx_b)).S.inverse();
  Eigen::MatrixXd T = Eigen::MatrixXd::Identity(4, 4);
  embed_local(T, Ta, idx_a);
  embed_local(T, Tb, idx_b);
  const Eigen::MatrixXd V1 = T * V.matrix * T.transpose();

  // Diagonalize the coupling with proper rotations (signed SVD); single-mode
  // rotations are symplectic and leave nu * identity marginals untouched.
  Eigen::Matrix2d K;
  K << V1(idx_a[0], idx_b[0]), V1(idx_a[0], idx_b[1]),
       V1(idx_a[1], idx_b[0]), V1(idx_a[1], idx_b[1]);
  Eigen::JacobiSVD<Eigen::Matrix2d> svd(K, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix2d U = svd.matrixU();
  Eigen::Matrix2d W = svd.matrixV();
  if (U.determinant() < 0) U.col(1) *= -1.0;
  if (W.determinant() < 0) W.col(1) *= -1.0;

  StandardFormResult out;
  out.S_A = U.transpose() * Ta;
  out.S_B = W.transpose() * Tb;
  Eigen::MatrixXd L = Eigen::MatrixXd::Identity(4, 4);
  embed_local(L, out.S_A, idx_a);
  embed_local(L, out.S_B, idx_b);
  Eigen::MatrixXd Vs = L * V.matrix * L.transpose();
  Vs = 0.5 * (Vs + Vs.transpose());
  out.V_std = Qcm(Vs, V.partition);
  return out;
}

}  // namespace gqi
