#include "gqi/verify.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "gqi/entanglement.hpp"
#include "gqi/infomeasures.hpp"
#include "gqi/model.hpp"
#include "gqi/random.hpp"
#include "gqi/schur.hpp"

namespace gqi {

namespace {

Eigen::MatrixXd random_pd(Rng& rng, int n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd B(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) B(i, j) = gauss(rng);
  }
  return B * B.transpose() + 0.1 * Eigen::MatrixXd::Identity(n, n);
}

Eigen::MatrixXd random_invertible(Rng& rng, int n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    Eigen::MatrixXd M(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) M(i, j) = gauss(rng);
    }
    if (std::abs(M.determinant()) > 1e-3) return M;
  }
}

std::vector<int> head_block(int k) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

int sym_rank(const Eigen::MatrixXd& M, double tol = 1e-8) {
  const Eigen::VectorXd sv = M.jacobiSvd().singularValues();
  if (sv.size() == 0) return 0;
  const double thr = tol * std::max(1.0, sv(0));
  int r = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > thr) ++r;
  }
  return r;
}

double min_eig(const Eigen::MatrixXd& M) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      0.5 * (M + M.transpose()), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

// Embed T on the leading k indices: 0_k-complement direct sum (0 ⊕ T).
Eigen::MatrixXd tail_embed(const Eigen::MatrixXd& T, int n, int k) {
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  M.bottomRightCorner(n - k, n - k) = T;
  return M;
}

Partition random_bipartition(Rng& rng, int max_side_modes = 2) {
  std::uniform_int_distribution<int> d(1, max_side_modes);
  return Partition{{"A", d(rng)}, {"B", d(rng)}};
}

// Random pure bipartite QCM that is already in xp-form: a direct sum of
// two-mode squeezed pairs (mode j of A with mode j of B) followed by a local
// congruence of the xp-form-preserving type diag(M_A (+) M_B, (M_A (+) M_B)^-T).
Qcm random_xp_pure(Rng& rng, int side_modes) {
  const int m = 2 * side_modes;
  std::uniform_real_distribution<double> r_dist(0.1, 0.8);
  Eigen::MatrixXd X = Eigen::MatrixXd::Identity(m, m);
  Eigen::MatrixXd P = Eigen::MatrixXd::Identity(m, m);
  for (int j = 0; j < side_modes; ++j) {
    const double r = r_dist(rng);
    X(j, j) = X(side_modes + j, side_modes + j) = std::cosh(2.0 * r);
    X(j, side_modes + j) = X(side_modes + j, j) = std::sinh(2.0 * r);
    P(j, j) = P(side_modes + j, side_modes + j) = std::cosh(2.0 * r);
    P(j, side_modes + j) = P(side_modes + j, j) = -std::sinh(2.0 * r);
  }
  // Well-conditioned local factors (cond <= e^{2 * 0.3 * n}) keep the O(t)
  // homodyne corrections small enough for the default schedule.
  auto gentle_invertible = [&](int n) {
    std::normal_distribution<double> gauss(0.0, 0.3);
    Eigen::MatrixXd G(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) G(i, j) = gauss(rng);
    }
    return Eigen::MatrixXd(G.exp());
  };
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(m, m);
  M.topLeftCorner(side_modes, side_modes) = gentle_invertible(side_modes);
  M.bottomRightCorner(side_modes, side_modes) = gentle_invertible(side_modes);
  Eigen::MatrixXd V = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  V.topLeftCorner(m, m) = M * X * M.transpose();
  const Eigen::MatrixXd Minv_t = M.inverse().transpose();
  V.bottomRightCorner(m, m) = Minv_t * P * Minv_t.transpose();
  return Qcm(0.5 * (V + V.transpose()),
             Partition{{"A", side_modes}, {"B", side_modes}});
}

}  // namespace

void record_failure(LawResult& law, std::uint64_t seed, int trial,
                    double value) {
  ++law.failures;
  if (law.first_failure.empty()) {
    law.first_failure = "seed=" + std::to_string(seed) +
                        " trial=" + std::to_string(trial) +
                        " value=" + std::to_string(value);
  }
}

std::vector<LawResult> verify_schur(int trials, std::uint64_t seed) {
  std::vector<LawResult> laws{{"determinant-factorization"},
                              {"inertia-additivity"},
                              {"block-positivity"},
                              {"congruence-covariance"},
                              {"monotonicity"},
                              {"variational"},
                              {"measurement-purity"}};
  Rng rng(seed);
  std::uniform_int_distribution<int> size_dist(2, 6);

  for (int t = 0; t < trials; ++t) {
    const int n = size_dist(rng);
    std::uniform_int_distribution<int> k_dist(1, n - 1);
    const int k = k_dist(rng);
    const auto blk = head_block(k);
    const Eigen::MatrixXd R = random_pd(rng, n);
    const Eigen::MatrixXd S = schur_complement(R, blk);
    const Eigen::MatrixXd X = R.topLeftCorner(k, k);

    for (auto& law : laws) ++law.trials;

    {
      const double lhs = R.determinant();
      const double rhs = X.determinant() * S.determinant();
      const double rel = std::abs(lhs - rhs) / std::abs(lhs);
      if (!(rel < 1e-8)) record_failure(laws[0], seed, t, rel);
    }
    {
      // Full-rank case plus an exactly rank-deficient construction.
      bool ok = sym_rank(R) == sym_rank(X) + sym_rank(S);
      Eigen::MatrixXd Z(k, n - k);
      std::normal_distribution<double> gauss(0.0, 1.0);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < n - k; ++j) Z(i, j) = gauss(rng);
      }
      Eigen::MatrixXd R2(n, n);
      R2.topLeftCorner(k, k) = X;
      R2.topRightCorner(k, n - k) = Z;
      R2.bottomLeftCorner(n - k, k) = Z.transpose();
      R2.bottomRightCorner(n - k, n - k) =
          Z.transpose() * X.llt().solve(Z);
      const Eigen::MatrixXd S2 = schur_complement(R2, blk);
      ok = ok && sym_rank(R2) == sym_rank(X) && sym_rank(S2) == 0;
      if (!ok) record_failure(laws[1], seed, t, 0.0);
    }
    {
      bool ok = min_eig(X) > 0.0 && min_eig(S) > 0.0;
      // Converse direction: damaging the complement must destroy positivity.
      Eigen::MatrixXd Rbad = R;
      Rbad.bottomRightCorner(n - k, n - k) -=
          (min_eig(S) + 0.1) * Eigen::MatrixXd::Identity(n - k, n - k);
      ok = ok && min_eig(Rbad) < 0.0;
      if (!ok) record_failure(laws[2], seed, t, min_eig(S));
    }
    {
      const Eigen::MatrixXd M = random_invertible(rng, k);
      const Eigen::MatrixXd N = random_invertible(rng, n - k);
      Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
      C.topLeftCorner(k, k) = M;
      C.bottomRightCorner(n - k, n - k) = N;
      const Eigen::MatrixXd lhs =
          schur_complement(C * R * C.transpose(), blk);
      const Eigen::MatrixXd rhs = N * S * N.transpose();
      const double rel = (lhs - rhs).norm() / rhs.norm();
      if (!(rel < 1e-8)) record_failure(laws[3], seed, t, rel);
    }
    {
      std::normal_distribution<double> gauss(0.0, 1.0);
      Eigen::MatrixXd C(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) C(i, j) = gauss(rng);
      }
      Eigen::MatrixXd P = C * C.transpose();
      P *= 0.25 * min_eig(R) / std::max(1e-12, min_eig(P) + P.norm());
      const Eigen::MatrixXd Rp = R - P;
      const double gap = min_eig(S - schur_complement(Rp, blk));
      if (!(gap > -1e-9)) record_failure(laws[4], seed, t, gap);
    }
    {
      bool ok = min_eig(R - tail_embed(S, n, k)) > -1e-9;
      std::normal_distribution<double> gauss(0.0, 1.0);
      Eigen::VectorXd v(n - k);
      for (int i = 0; i < n - k; ++i) v(i) = gauss(rng);
      v.normalize();
      const Eigen::MatrixXd T = S + 1e-4 * v * v.transpose();
      ok = ok && min_eig(R - tail_embed(T, n, k)) < -1e-10;
      if (!ok) record_failure(laws[5], seed, t, 0.0);
    }
    {
      // Pure state, pure seed: the post-measurement QCM stays pure.
      const Partition part{{"A", 1}, {"B", 1 + t % 2}};
      const Qcm V(random_pure_qcm_matrix(rng, part.total_modes()), part);
      const Qcm seed_a(random_pure_qcm_matrix(rng, 1), Partition{{"A", 1}});
      const Qcm out = measurement_update(V, seed_a);
      if (!out.is_pure(1e-7)) {
        record_failure(laws[6], seed, t, out.matrix.determinant());
      }
    }
  }
  return laws;
}

std::vector<LawResult> verify_symplectic(int trials, std::uint64_t seed) {
  std::vector<LawResult> laws{{"williamson-reconstruction"},
                              {"spectrum-invariance"},
                              {"pure-spectrum"},
                              {"uncertainty-bound"}};
  Rng rng(seed);
  std::uniform_int_distribution<int> m_dist(1, 3);

  for (int t = 0; t < trials; ++t) {
    const int m = m_dist(rng);
    const Qcm V = random_qcm(rng, Partition{{"S", m}});
    for (auto& law : laws) ++law.trials;

    const auto wd = williamson(V.matrix);
    {
      const double rel =
          (wd.reconstruct() - V.matrix).norm() / V.matrix.norm();
      const bool ok = rel < 1e-8 && is_symplectic(wd.S, 1e-8);
      if (!ok) record_failure(laws[0], seed, t, rel);
    }
    {
      const Eigen::MatrixXd T = random_symplectic(rng, m);
      const Eigen::VectorXd nu2 =
          symplectic_eigenvalues(T * V.matrix * T.transpose());
      const double rel =
          (nu2 - wd.nu).cwiseAbs().maxCoeff() / wd.nu.maxCoeff();
      if (!(rel < 1e-8)) record_failure(laws[1], seed, t, rel);
    }
    {
      const Eigen::MatrixXd P = random_pure_qcm_matrix(rng, m);
      const double dev =
          (symplectic_eigenvalues(P).array() - 1.0).abs().maxCoeff();
      const bool ok = dev < 1e-8 && is_pure_qcm(P);
      if (!ok) record_failure(laws[2], seed, t, dev);
    }
    {
      const double numin = wd.nu.minCoeff();
      if (!(numin >= 1.0 - 1e-9)) record_failure(laws[3], seed, t, numin);
    }
  }
  return laws;
}

std::vector<LawResult> verify_infomeasures(int trials, std::uint64_t seed) {
  std::vector<LawResult> laws{{"symplectic-invariance"},
                              {"rescaling"},
                              {"data-processing"},
                              {"inversion"},
                              {"xp-sum"},
                              {"uniform-continuity"},
                              {"pure-identity"},
                              {"homodyne-limit"}};
  Rng rng(seed);
  const Split split{{"A"}, {"B"}};

  for (int t = 0; t < trials; ++t) {
    const Partition part = random_bipartition(rng);
    const Qcm V = random_qcm(rng, part);
    const double im = im_mutual(V, split);
    for (auto& law : laws) ++law.trials;

    {
      const Eigen::MatrixXd L = random_local_symplectic(rng, part);
      const double im2 =
          im_mutual(Qcm(L * V.matrix * L.transpose(), part), split);
      if (!(std::abs(im2 - im) < 1e-8)) {
        record_failure(laws[0], seed, t, im2 - im);
      }
    }
    {
      std::uniform_real_distribution<double> s_dist(0.2, 5.0);
      const double c = s_dist(rng);
      const double im2 = im_mutual(Qcm(c * V.matrix, part), split);
      if (!(std::abs(im2 - im) < 1e-9)) {
        record_failure(laws[1], seed, t, im2 - im);
      }
    }
    {
      const auto idx_a = part.xp_indices({"A"});
      const Eigen::MatrixXd K =
          random_pd(rng, static_cast<int>(idx_a.size()));
      Eigen::MatrixXd M = V.matrix;
      for (std::size_t i = 0; i < idx_a.size(); ++i) {
        for (std::size_t j = 0; j < idx_a.size(); ++j) {
          M(idx_a[i], idx_a[j]) += K(i, j);
        }
      }
      const double im2 = im_mutual(Qcm(M, part), split);
      if (!(im2 <= im + 1e-9)) record_failure(laws[2], seed, t, im2 - im);
    }
    {
      const double im2 = im_mutual(Qcm(V.matrix.inverse(), part), split);
      if (!(std::abs(im2 - im) < 1e-8)) {
        record_failure(laws[3], seed, t, im2 - im);
      }
    }
    {
      const auto [ix, ip] = im_xp_decompose(V, split);
      if (!(std::abs(ix + ip - im) < 1e-8)) {
        record_failure(laws[4], seed, t, ix + ip - im);
      }
    }
    {
      const Eigen::MatrixXd D = 1e-2 * random_symmetric(rng, V.dim());
      const Qcm W(V.matrix + D, part);
      const double kappa =
          1.0 / std::min(min_eig(V.matrix), min_eig(W.matrix));
      const double bound =
          kappa * std::log2(std::exp(1.0)) * trace_norm(D) + 1e-9;
      const double diff = std::abs(im_mutual(W, split) - im);
      if (!(diff <= bound)) record_failure(laws[5], seed, t, diff - bound);
    }
    const Qcm P(random_pure_qcm_matrix(rng, part.total_modes()), part);
    {
      const double lhs = im_mutual(P, split);
      const double rhs =
          2.0 * logdet_entropy(submatrix(P.matrix, part.xp_indices({"A"})));
      if (!(std::abs(lhs - rhs) < 1e-8)) {
        record_failure(laws[6], seed, t, lhs - rhs);
      }
    }
    {
      // The homodyne family attains the pure-state optimum in the xp-form
      // (normal) frame, so test on pure states built in that frame.
      std::uniform_int_distribution<int> m_dist(1, 2);
      const Qcm Pxp = random_xp_pure(rng, m_dist(rng));
      const double lim = homodyne_limit_im(Pxp, split).value;
      const double rhs = logdet_entropy(
          submatrix(Pxp.matrix, Pxp.partition.xp_indices({"A"})));
      if (!(std::abs(lim - rhs) < 1e-4)) {
        record_failure(laws[7], seed, t, lim - rhs);
      }
    }
  }
  return laws;
}

std::vector<LawResult> verify_conjecture(int trials, std::uint64_t seed) {
  std::vector<LawResult> laws{{"saddle-bracket"}};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    ++laws[0].trials;
    const Qcm V = random_two_mode_qcm(rng);
    const Split split{{"A"}, {"B"}};
    OptimOptions opts;
    opts.seed = seed + static_cast<std::uint64_t>(t);
    const double e = reof_numeric(V, split, opts).value;
    const GieResult g = gie_numeric(V, split, opts);
    const double dev = std::max(std::abs(g.upper - e), std::abs(e - g.lower));
    if (!(dev <= 2e-2)) record_failure(laws[0], seed, t, dev);
  }
  return laws;
}

}  // namespace gqi
