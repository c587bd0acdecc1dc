#include "gqi/infomeasures.hpp"

#include <algorithm>
#include <cmath>

#include "gqi/model.hpp"
#include "gqi/schur.hpp"

namespace gqi {

namespace {

void check_split(const Qcm& V, const Split& split) {
  auto all = split.a;
  all.insert(all.end(), split.b.begin(), split.b.end());
  if (split.a.empty() || split.b.empty()) {
    throw PartitionError("split: both sides must be non-empty");
  }
  std::vector<std::string> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PartitionError("split: subsystem listed twice");
  }
  for (const auto& n : all) {
    if (!V.partition.has(n)) throw PartitionError("split: unknown subsystem '" + n + "'");
  }
}

}  // namespace

double half_log2_det(const Eigen::MatrixXd& M) {
  if (M.rows() != M.cols()) throw InvalidShapeError("half_log2_det: matrix not square");
  Eigen::LLT<Eigen::MatrixXd> llt(0.5 * (M + M.transpose()));
  if (llt.info() != Eigen::Success) {
    throw InvalidInputError("half_log2_det: matrix is not positive definite");
  }
  double acc = 0.0;
  for (int i = 0; i < M.rows(); ++i) {
    acc += std::log2(llt.matrixLLT()(i, i));
  }
  return acc;  // = (1/2) log2 det M since det = prod L_ii^2
}

double logdet_entropy(const Eigen::MatrixXd& V) { return half_log2_det(V); }
double logdet_entropy(const Qcm& V) { return half_log2_det(V.matrix); }

double bosonic_g(double x) {
  if (x < 0.0) throw InvalidInputError("bosonic_g: argument must be >= 0");
  if (x == 0.0) return 0.0;
  return (x + 1.0) * std::log2(x + 1.0) - x * std::log2(x);
}

double von_neumann_entropy(const Eigen::MatrixXd& V) {
  const Eigen::VectorXd nu = symplectic_eigenvalues(V);
  double acc = 0.0;
  for (int j = 0; j < nu.size(); ++j) {
    acc += bosonic_g(std::max(0.0, (nu(j) - 1.0) / 2.0));
  }
  return acc;
}

double von_neumann_entropy(const Qcm& V) { return von_neumann_entropy(V.matrix); }

double im_mutual_idx(const Eigen::MatrixXd& M, const std::vector<int>& idx_a,
                     const std::vector<int>& idx_b) {
  if (idx_a.size() + idx_b.size() != static_cast<std::size_t>(M.rows())) {
    throw InvalidShapeError("im_mutual_idx: index sets must cover the matrix");
  }
  return half_log2_det(submatrix(M, idx_a)) + half_log2_det(submatrix(M, idx_b)) -
         half_log2_det(M);
}

double im_mutual(const Qcm& V, const Split& split) {
  check_split(V, split);
  auto all = split.a;
  all.insert(all.end(), split.b.begin(), split.b.end());
  if (all.size() != V.partition.size()) {
    // Work on the reduced state when the split does not cover everything.
    return im_mutual(V.block(all), split);
  }
  return half_log2_det(V.block(split.a).matrix) +
         half_log2_det(V.block(split.b).matrix) - half_log2_det(V.matrix);
}

MeasureValue im_conditional(const Qcm& V, const Split& split,
                            const std::vector<std::string>& cond) {
  check_split(V, split);
  if (cond.empty()) {
    return {im_mutual(V, split), {}};
  }
  for (const auto& n : cond) {
    if (!V.partition.has(n)) throw PartitionError("im_conditional: unknown subsystem '" + n + "'");
  }

  // Route 1: direct determinant ratio
  //   (1/2) log2 [ det V_AE det V_BE / (det V_E det V_ABE) ].
  auto ae = split.a;
  ae.insert(ae.end(), cond.begin(), cond.end());
  auto be = split.b;
  be.insert(be.end(), cond.begin(), cond.end());
  auto abe = split.a;
  abe.insert(abe.end(), split.b.begin(), split.b.end());
  abe.insert(abe.end(), cond.begin(), cond.end());
  const Qcm W = V.block(abe);  // reduce in case V has extra subsystems
  const double direct = half_log2_det(W.block(ae).matrix) +
                        half_log2_det(W.block(be).matrix) -
                        half_log2_det(W.block(cond).matrix) -
                        half_log2_det(W.matrix);

  // Route 2: I_M of the Schur complement W / W_E.
  const auto e_idx = W.partition.xp_indices(cond);
  const Eigen::MatrixXd Wred = schur_complement(W.matrix, e_idx);
  const auto rest = W.partition.complement(cond);
  const Qcm Wq(Wred, W.partition.subset(rest));
  const double schur_route = im_mutual(Wq, split);

  MeasureValue out;
  out.value = direct;
  out.diagnostics["route_disagreement"] = std::abs(direct - schur_route);
  out.diagnostics["schur_route"] = schur_route;
  return out;
}

std::pair<double, double> im_xp_decompose(const Qcm& V, const Split& split) {
  check_split(V, split);
  auto all = split.a;
  all.insert(all.end(), split.b.begin(), split.b.end());
  const Qcm W = (all.size() == V.partition.size()) ? V : V.block(all);
  const int m = W.modes();
  // V^x is the x-x block; mode k of W owns row k there.
  const Eigen::MatrixXd Vx = W.matrix.topLeftCorner(m, m);
  const auto pos_a = W.partition.mode_indices(split.a);
  const auto pos_b = W.partition.mode_indices(split.b);
  const double ix = im_mutual_idx(Vx, pos_a, pos_b);

  // Momentum part conditioned on x. The marginal determinants factor through
  // the marginals' own x blocks (det V_A = det V_A^x det(V_A/V_A^x)), so the
  // numerator uses marginal-wise complements; only then does the sum of the
  // two parts telescope exactly to im_mutual.
  auto p_given_x = [&](const std::vector<std::string>& side) {
    const Eigen::MatrixXd Vs = submatrix(W.matrix, W.partition.xp_indices(side));
    const int ms = static_cast<int>(Vs.rows()) / 2;
    std::vector<int> xs(ms);
    for (int k = 0; k < ms; ++k) xs[k] = k;
    return schur_complement(Vs, xs);
  };
  std::vector<int> x_idx(m);
  for (int k = 0; k < m; ++k) x_idx[k] = k;
  const Eigen::MatrixXd Vp_given_x = schur_complement(W.matrix, x_idx);
  const double ip = half_log2_det(p_given_x(split.a)) +
                    half_log2_det(p_given_x(split.b)) -
                    half_log2_det(Vp_given_x);
  return {ix, ip};
}

MeasureValue homodyne_limit_im(const Qcm& V, const Split& split,
                               const std::vector<double>& schedule) {
  check_split(V, split);
  if (schedule.size() < 2) {
    throw InvalidInputError("homodyne_limit_im: schedule needs >= 2 values");
  }
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (!(schedule[i] > 0.0) ||
        (i > 0 && !(schedule[i] < schedule[i - 1]))) {
      throw InvalidInputError(
          "homodyne_limit_im: schedule must be strictly decreasing and positive");
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(V.matrix, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (!(min_eig > 0.0)) {
    throw InvalidInputError("homodyne_limit_im: V must be positive definite");
  }

  auto all = split.a;
  all.insert(all.end(), split.b.begin(), split.b.end());
  const Qcm W = (all.size() == V.partition.size()) ? V : V.block(all);

  MeasureValue out;
  std::vector<double> values;
  double prev_change = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const double t = schedule[i];
    Qcm seeded = W;
    for (const auto& n : all) {
      seeded = add_seed(seeded, n, homodyne_seed(t, W.partition.modes_of(n)));
    }
    const double f = im_mutual(seeded, split);
    values.push_back(f);
    out.diagnostics["t_" + std::to_string(i)] = f;
    if (i >= 1) {
      const double change = std::abs(values[i] - values[i - 1]);
      if (change > 2.0 * prev_change + 1e-12) {
        throw ConvergenceError(
            "homodyne_limit_im: schedule values are not converging");
      }
      prev_change = change;
    }
  }
  // f(t) = L + c t + O(t^2): eliminate the linear term from the last two points.
  const double t1 = schedule[schedule.size() - 2];
  const double t2 = schedule[schedule.size() - 1];
  const double f1 = values[values.size() - 2];
  const double f2 = values[values.size() - 1];
  const double limit = (t1 * f2 - t2 * f1) / (t1 - t2);
  out.value = limit;
  out.diagnostics["error_estimate"] = std::abs(limit - f2);
  return out;
}

double trace_norm(const Eigen::MatrixXd& M) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (M + M.transpose()),
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

}  // namespace gqi
