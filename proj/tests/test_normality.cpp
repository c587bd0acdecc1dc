#include <doctest.h>

#include "gqi/model.hpp"
#include "gqi/normality.hpp"
#include "gqi/random.hpp"
#include "gqi/symplectic.hpp"

using namespace gqi;

namespace {
const Split kAB{{"A"}, {"B"}};
}

TEST_CASE("two-mode standard form invariants") {
  Rng rng(31);
  for (int t = 0; t < 10; ++t) {
    const Qcm V = random_two_mode_qcm(rng);
    const auto sf = two_mode_standard_form(V);
    const Eigen::MatrixXd& M = sf.V_std.matrix;
    // Diagonal local blocks a*1 and b*1, diagonal coupling.
    CHECK(M(0, 0) == doctest::Approx(M(2, 2)).epsilon(1e-9));
    CHECK(M(1, 1) == doctest::Approx(M(3, 3)).epsilon(1e-9));
    CHECK(std::abs(M(0, 2)) < 1e-9);
    CHECK(std::abs(M(1, 3)) < 1e-9);
    CHECK(std::abs(M(0, 3)) < 1e-9);
    CHECK(std::abs(M(1, 2)) < 1e-9);
    CHECK(is_xp_form(M, 1e-9));
    // Reached by the returned local symplectics.
    CHECK(is_symplectic(sf.S_A, 1e-9));
    CHECK(is_symplectic(sf.S_B, 1e-9));
    // Symplectic spectrum is preserved.
    const Eigen::VectorXd nu0 = symplectic_eigenvalues(V.matrix);
    const Eigen::VectorXd nu1 = symplectic_eigenvalues(M);
    CHECK((nu0 - nu1).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("two-mode states are always normal") {
  Rng rng(5);
  for (int t = 0; t < 5; ++t) {
    const Qcm V = random_two_mode_qcm(rng);
    const auto rep = is_normal(V, kAB);
    CHECK(rep.certificate == NormalityCertificate::NormalByConstruction);
    CHECK(rep.residual < 1e-7);
  }
}

TEST_CASE("pure states are normal by construction") {
  const auto rep = is_normal(tmsv(8.0), kAB);
  CHECK(rep.certificate == NormalityCertificate::NormalByConstruction);
}

TEST_CASE("non-normal family instance carries an obstruction") {
  Eigen::Matrix2d F, G;
  F << 1.0, 0.0, 0.0, 0.0;                     // (1 + sigma_z) / 2
  G << 0.5, 0.5, 0.5, 0.5;                     // (1 + sigma_x) / 2
  const auto [V, rep] = non_normal_family(3.0, 2.0, 3.0, F, G);
  CHECK(V.is_bona_fide());
  CHECK(rep.certificate == NormalityCertificate::ObstructionFound);
  REQUIRE(rep.obstruction.has_value());
  // [FF^T, GG^T] = [diag(1,0), (1+sigma_x)/2] has Frobenius norm 1/sqrt(2).
  CHECK(rep.obstruction->first == doctest::Approx(std::sqrt(0.5)));
  CHECK(rep.obstruction->second == doctest::Approx(1.0));  // |b1 - b2|
}

TEST_CASE("family without the obstruction is not flagged") {
  Eigen::Matrix2d F;
  F << 0.5, 0.0, 0.0, -0.5;
  // F = G makes the commutator vanish; equal baths remove the other half.
  const auto [v1, rep1] = non_normal_family(3.0, 2.0, 3.0, F, F);
  CHECK(rep1.certificate != NormalityCertificate::ObstructionFound);
  Eigen::Matrix2d G;
  G << 0.5, 0.5, 0.5, -0.5;
  const auto [v2, rep2] = non_normal_family(3.0, 2.5, 2.5, F, G);
  CHECK(rep2.certificate != NormalityCertificate::ObstructionFound);
  // Proportional-to-orthogonal couplings have commuting Gram matrices even
  // with distinct baths; that member is in fact normal (a single quadrature
  // rotation on B2 brings it to xp-form), and the search finds the rotation.
  const auto [v3, rep3] = non_normal_family(3.0, 2.0, 3.0, F, G);
  CHECK(rep3.certificate != NormalityCertificate::ObstructionFound);
  const auto direct = is_normal(v3, {{"A"}, {"B1", "B2"}});
  CHECK(direct.certificate == NormalityCertificate::NumericallyNormal);
  CHECK(direct.residual < 1e-9);
}

TEST_CASE("family input validation") {
  Eigen::Matrix2d F = Eigen::Matrix2d::Identity() * 2.0;  // spectral norm 2
  Eigen::Matrix2d G = Eigen::Matrix2d::Zero();
  CHECK_THROWS_AS(non_normal_family(3.0, 2.0, 3.0, F, G), InvalidInputError);
  Eigen::Matrix2d ok = 0.5 * Eigen::Matrix2d::Identity();
  CHECK_THROWS_AS(non_normal_family(1.0, 2.0, 3.0, ok, ok), InvalidInputError);
}
