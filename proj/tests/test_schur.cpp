#include <doctest.h>

#include "gqi/random.hpp"
#include "gqi/schur.hpp"
#include "gqi/symplectic.hpp"

using namespace gqi;

TEST_CASE("schur complement of a 2x2 matrix") {
  Eigen::MatrixXd R(2, 2);
  R << 2.0, 1.0, 1.0, 2.0;
  const Eigen::MatrixXd C = schur_complement(R, {0});
  REQUIRE(C.rows() == 1);
  CHECK(C(0, 0) == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("determinant factorization det R = det X det(R/X)") {
  Rng rng(11);
  for (int t = 0; t < 10; ++t) {
    const Qcm V = random_qcm(rng, {{"A", 2}, {"B", 1}});
    const std::vector<int> blk = {0, 3, 4};
    const Eigen::MatrixXd C = schur_complement(V.matrix, blk);
    Eigen::MatrixXd X(3, 3);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) X(i, j) = V.matrix(blk[i], blk[j]);
    }
    CHECK(V.matrix.determinant() ==
          doctest::Approx(X.determinant() * C.determinant()).epsilon(1e-9));
  }
}

TEST_CASE("pure-state complement is the inverted marginal") {
  // For pure gamma on (A, B): gamma/gamma_B = Omega_A gamma_A^{-1} Omega_A^T.
  Rng rng(5);
  const Eigen::MatrixXd g = random_pure_qcm_matrix(rng, 2);
  const Qcm G(g, Partition{{"A", 1}, {"B", 1}});
  const auto b_idx = G.partition.xp_indices({"B"});
  const auto a_idx = G.partition.xp_indices({"A"});
  const Eigen::MatrixXd C = schur_complement(g, b_idx);
  Eigen::MatrixXd gA(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) gA(i, j) = g(a_idx[i], a_idx[j]);
  }
  const Eigen::MatrixXd Oa = omega(1);
  const Eigen::MatrixXd expect = Oa * gA.inverse() * Oa.transpose();
  CHECK((C - expect).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("condition guard refuses near-singular pivot blocks") {
  Eigen::MatrixXd R = Eigen::MatrixXd::Identity(4, 4);
  R(0, 0) = 1e-14;
  CHECK_THROWS_AS(schur_complement(R, {0, 1}), SingularBlockError);
}

TEST_CASE("index validation") {
  Eigen::MatrixXd R = Eigen::MatrixXd::Identity(4, 4);
  CHECK_THROWS_AS(schur_complement(R, {0, 7}), InvalidInputError);
  CHECK_THROWS_AS(schur_complement(R, {0, 1, 2, 3}), InvalidInputError);
}
