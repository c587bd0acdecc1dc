#include <doctest.h>

#include "gqi/random.hpp"
#include "gqi/symplectic.hpp"

using namespace gqi;

TEST_CASE("omega and ordering permutation") {
  const Eigen::MatrixXd O = omega(2);
  CHECK(O(0, 2) == 1.0);
  CHECK(O(2, 0) == -1.0);
  CHECK((O + O.transpose()).norm() == 0.0);

  // Involutive congruence between orderings.
  Rng rng(1);
  const Qcm V = random_qcm(rng, {{"A", 1}, {"B", 2}});
  const Eigen::MatrixXd mw = reorder(V.matrix, Ordering::XpBlock, Ordering::ModeWise);
  const Eigen::MatrixXd back = reorder(mw, Ordering::ModeWise, Ordering::XpBlock);
  CHECK((back - V.matrix).cwiseAbs().maxCoeff() == doctest::Approx(0.0).epsilon(1e-14));

  // Omega in modewise ordering has 2x2 [[0,1],[-1,0]] blocks on the diagonal.
  const Eigen::MatrixXd Om = omega(2, Ordering::ModeWise);
  CHECK(Om(0, 1) == 1.0);
  CHECK(Om(1, 0) == -1.0);
  CHECK(Om(0, 2) == 0.0);
}

TEST_CASE("williamson of a single-mode squeezed thermal state") {
  // V = diag(4, 1) = S diag(2, 2) S^T with S = diag(sqrt2, 1/sqrt2).
  Eigen::MatrixXd V(2, 2);
  V << 4.0, 0.0, 0.0, 1.0;
  const auto wd = williamson(V);
  CHECK(wd.nu(0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(wd.S(0, 0)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(std::abs(wd.S(1, 1)) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK((wd.reconstruct() - V).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(is_symplectic(wd.S));
}

TEST_CASE("williamson reconstruction on random states") {
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    const Qcm V = random_qcm(rng, {{"A", 2}, {"B", 1}});
    const auto wd = williamson(V.matrix);
    CHECK(is_symplectic(wd.S, 1e-8));
    CHECK((wd.reconstruct() - V.matrix).cwiseAbs().maxCoeff() <
          1e-8 * V.matrix.cwiseAbs().maxCoeff());
    for (int j = 0; j < V.modes(); ++j) CHECK(wd.nu(j) >= 1.0 - 1e-10);
    // Decreasing order.
    for (int j = 1; j < V.modes(); ++j) CHECK(wd.nu(j) <= wd.nu(j - 1) + 1e-12);
  }
}

TEST_CASE("xp-form inputs get a GL-embedded symplectic") {
  Eigen::MatrixXd V(4, 4);
  V << 3.0, 1.0, 0.0, 0.0,
       1.0, 2.0, 0.0, 0.0,
       0.0, 0.0, 2.5, -0.5,
       0.0, 0.0, -0.5, 1.8;
  REQUIRE(is_xp_form(V));
  const auto wd = williamson(V);
  // S = diag(M, M^{-T}): the off-diagonal blocks vanish.
  CHECK(wd.S.topRightCorner(2, 2).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(wd.S.bottomLeftCorner(2, 2).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((wd.reconstruct() - V).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("purity detection") {
  Rng rng(3);
  const Eigen::MatrixXd P = random_pure_qcm_matrix(rng, 2);
  CHECK(is_pure_qcm(P));
  CHECK(!is_pure_qcm(1.5 * P));
  const Eigen::VectorXd nu = symplectic_eigenvalues(1.5 * P);
  for (int j = 0; j < 2; ++j) CHECK(nu(j) == doctest::Approx(1.5).epsilon(1e-10));
}

TEST_CASE("symplectic eigenvalue input validation") {
  Eigen::MatrixXd bad(3, 3);
  bad.setIdentity();
  CHECK_THROWS_AS(symplectic_eigenvalues(bad), InvalidShapeError);
  Eigen::MatrixXd neg = -Eigen::MatrixXd::Identity(2, 2);
  CHECK_THROWS_AS(symplectic_eigenvalues(neg), InvalidInputError);
}
