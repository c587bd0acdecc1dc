#include "gqi/symplectic.hpp"

#include <cmath>
#include <complex>

namespace gqi {

namespace {

void require_even_square(const Eigen::MatrixXd& M, const char* what) {
  if (M.rows() != M.cols() || M.rows() % 2 != 0 || M.rows() == 0) {
    throw InvalidShapeError(std::string(what) +
                            ": matrix must be square with even dimension");
  }
}

void require_symmetric_pd(const Eigen::MatrixXd& V, const char* what) {
  require_even_square(V, what);
  if ((V - V.transpose()).cwiseAbs().maxCoeff() >
      1e-10 * std::max(1.0, V.cwiseAbs().maxCoeff())) {
    throw InvalidInputError(std::string(what) + ": matrix is not symmetric");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(V);
  if (llt.info() != Eigen::Success) {
    throw InvalidInputError(std::string(what) +
                            ": matrix is not positive definite");
  }
}

}  // namespace

Eigen::MatrixXd omega(int modes, Ordering ordering) {
  if (modes < 1) throw InvalidInputError("omega: mode count must be >= 1");
  const int m = modes;
  Eigen::MatrixXd O = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  if (ordering == Ordering::XpBlock) {
    O.topRightCorner(m, m) = Eigen::MatrixXd::Identity(m, m);
    O.bottomLeftCorner(m, m) = -Eigen::MatrixXd::Identity(m, m);
  } else {
    for (int j = 0; j < m; ++j) {
      O(2 * j, 2 * j + 1) = 1.0;
      O(2 * j + 1, 2 * j) = -1.0;
    }
  }
  return O;
}

Eigen::MatrixXd ordering_permutation(int modes, Ordering from, Ordering to) {
  const int m = modes;
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  if (from == to) return Eigen::MatrixXd::Identity(2 * m, 2 * m);
  if (from == Ordering::ModeWise && to == Ordering::XpBlock) {
    // new row j <- old row 2j (x), new row m+j <- old row 2j+1 (p)
    for (int j = 0; j < m; ++j) {
      P(j, 2 * j) = 1.0;
      P(m + j, 2 * j + 1) = 1.0;
    }
  } else {
    for (int j = 0; j < m; ++j) {
      P(2 * j, j) = 1.0;
      P(2 * j + 1, m + j) = 1.0;
    }
  }
  return P;
}

Eigen::MatrixXd reorder(const Eigen::MatrixXd& V, Ordering from, Ordering to) {
  require_even_square(V, "reorder");
  if (from == to) return V;
  const Eigen::MatrixXd P =
      ordering_permutation(static_cast<int>(V.rows()) / 2, from, to);
  return P * V * P.transpose();
}

bool is_symplectic(const Eigen::MatrixXd& S, double tol) {
  require_even_square(S, "is_symplectic");
  const int m = static_cast<int>(S.rows()) / 2;
  const Eigen::MatrixXd O = omega(m);
  return (S * O * S.transpose() - O).cwiseAbs().maxCoeff() <= tol;
}

bool is_xp_form(const Eigen::MatrixXd& V, double tol) {
  require_even_square(V, "is_xp_form");
  const int m = static_cast<int>(V.rows()) / 2;
  return V.topRightCorner(m, m).cwiseAbs().maxCoeff() <= tol;
}

Eigen::VectorXd symplectic_eigenvalues(const Eigen::MatrixXd& V) {
  require_symmetric_pd(V, "symplectic_eigenvalues");
  const int m = static_cast<int>(V.rows()) / 2;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (V + V.transpose()));
  const Eigen::MatrixXd sqrtV = es.operatorSqrt();
  // i * (V^{1/2} Omega V^{1/2}) is Hermitian with eigenvalues {+-nu_j}.
  const Eigen::MatrixXd K = sqrtV * omega(m) * sqrtV;
  Eigen::MatrixXcd H = std::complex<double>(0.0, 1.0) * K.cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> hes(H, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = hes.eigenvalues();  // ascending: -nu ... +nu
  Eigen::VectorXd nu(m);
  for (int j = 0; j < m; ++j) nu(j) = ev(2 * m - 1 - j);  // descending
  return nu;
}

Eigen::MatrixXd WilliamsonDecomposition::lambda() const {
  const int m = static_cast<int>(nu.size());
  Eigen::VectorXd d(2 * m);
  d << nu, nu;
  return d.asDiagonal();
}

Eigen::MatrixXd WilliamsonDecomposition::reconstruct() const {
  return S * lambda() * S.transpose();
}

namespace {

// Constructive xp-form route: V = diag(Q, P) with Q, P symmetric PD. Choose
// orthogonal O with O^T Q^{1/2} P Q^{1/2} O = D^2 and set M = Q^{1/2} O D^{-1/2};
// then S = diag(M, M^{-T}) is symplectic and S diag(D, D) S^T = V.
WilliamsonDecomposition williamson_xp(const Eigen::MatrixXd& V) {
  const int m = static_cast<int>(V.rows()) / 2;
  const Eigen::MatrixXd Q = V.topLeftCorner(m, m);
  const Eigen::MatrixXd P = V.bottomRightCorner(m, m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> esq(0.5 * (Q + Q.transpose()));
  const Eigen::MatrixXd sqrtQ = esq.operatorSqrt();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sqrtQ * P * sqrtQ);
  // Sort descending so nu is descending.
  const int n = m;
  Eigen::VectorXd d2(n);
  Eigen::MatrixXd O(n, n);
  for (int j = 0; j < n; ++j) {
    d2(j) = es.eigenvalues()(n - 1 - j);
    O.col(j) = es.eigenvectors().col(n - 1 - j);
  }
  const Eigen::VectorXd D = d2.cwiseSqrt();
  const Eigen::MatrixXd M =
      sqrtQ * O * D.cwiseSqrt().cwiseInverse().asDiagonal();
  const Eigen::MatrixXd Minv_t = M.inverse().transpose();
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  S.topLeftCorner(m, m) = M;
  S.bottomRightCorner(m, m) = Minv_t;
  return {S, D};
}

// General route: W = V^{-1/2} Omega V^{-1/2} is antisymmetric; eigenvectors of
// the Hermitian iW at eigenvalue +mu_j give an orthogonal O with
// O^T W O = [[0, N], [-N, 0]], N = diag(mu). Then S = V^{1/2} O diag(sqrt(mu))
// is symplectic with S diag(1/mu, 1/mu) S^T = V, i.e. nu_j = 1/mu_j.
WilliamsonDecomposition williamson_general(const Eigen::MatrixXd& V) {
  const int m = static_cast<int>(V.rows()) / 2;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (V + V.transpose()));
  const Eigen::MatrixXd sqrtV = es.operatorSqrt();
  const Eigen::MatrixXd isqrtV = es.operatorInverseSqrt();
  const Eigen::MatrixXd W = isqrtV * omega(m) * isqrtV;
  Eigen::MatrixXcd H = std::complex<double>(0.0, 1.0) * W.cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> hes(0.5 * (H + H.adjoint()));
  // Eigenvalues ascend as (-mu_max ... -mu_min, +mu_min ... +mu_max); the
  // positive half in ascending mu order makes nu = 1/mu descending.
  Eigen::VectorXd mu(m);
  Eigen::MatrixXd O(2 * m, 2 * m);
  for (int j = 0; j < m; ++j) {
    mu(j) = hes.eigenvalues()(m + j);
    const Eigen::VectorXcd u = hes.eigenvectors().col(m + j);
    // u = (a + i b)/sqrt(2) with W a = mu b, W b = -mu a; columns (a, -b)
    // assemble an orthogonal O with O^T W O = [[0, N], [-N, 0]].
    O.col(j) = std::sqrt(2.0) * u.real();
    O.col(m + j) = -std::sqrt(2.0) * u.imag();
  }
  Eigen::VectorXd f(2 * m);
  f << mu.cwiseSqrt(), mu.cwiseSqrt();
  const Eigen::MatrixXd S = sqrtV * O * f.asDiagonal();
  return {S, mu.cwiseInverse()};
}

}  // namespace

WilliamsonDecomposition williamson(const Eigen::MatrixXd& V) {
  require_symmetric_pd(V, "williamson");
  if (is_xp_form(V)) return williamson_xp(V);
  return williamson_general(V);
}

bool is_pure_qcm(const Eigen::MatrixXd& V, double tol) {
  const Eigen::VectorXd nu = symplectic_eigenvalues(V);
  return (nu.array() - 1.0).abs().maxCoeff() <= tol;
}

}  // namespace gqi
