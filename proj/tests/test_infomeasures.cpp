#include <doctest.h>

#include <cmath>

#include "gqi/infomeasures.hpp"
#include "gqi/model.hpp"
#include "gqi/random.hpp"

using namespace gqi;

namespace {
const Split kAB{{"A"}, {"B"}};
}

TEST_CASE("log-det entropy and bosonic g") {
  CHECK(bosonic_g(0.0) == 0.0);
  CHECK(bosonic_g(1.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK_THROWS_AS(bosonic_g(-0.1), InvalidInputError);
  CHECK(half_log2_det(4.0 * Eigen::MatrixXd::Identity(2, 2)) ==
        doctest::Approx(2.0).epsilon(1e-14));
  Eigen::MatrixXd neg = -Eigen::MatrixXd::Identity(2, 2);
  CHECK_THROWS_AS(half_log2_det(neg), InvalidInputError);
}

TEST_CASE("mutual information of the TMSV") {
  const double s = 6.0;
  const double r = squeeze_param(s);
  const Qcm V = tmsv(s);
  // det V_A = det V_B = cosh^2(2r), det V = 1.
  const double expect = 2.0 * std::log2(std::cosh(2 * r));
  CHECK(im_mutual(V, kAB) == doctest::Approx(expect).epsilon(1e-12));

  // x and p parts are equal and sum to the total.
  const auto [ix, ip] = im_xp_decompose(V, kAB);
  CHECK(ix == doctest::Approx(std::log2(std::cosh(2 * r))).epsilon(1e-10));
  CHECK(ix + ip == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("conditional mutual information routes agree") {
  Rng rng(23);
  const Qcm V = random_qcm(rng, {{"A", 1}, {"B", 1}, {"E", 1}});
  const auto mv = im_conditional(V, kAB, {"E"});
  CHECK(mv.diagnostics.at("route_disagreement") < 1e-9);
  // Conditioning on nothing reduces to the mutual information.
  const auto plain = im_conditional(V, kAB, {});
  CHECK(plain.value == doctest::Approx(im_mutual(V, kAB)).epsilon(1e-12));
}

TEST_CASE("pure-state identity I_M = 2 M(gamma_A)") {
  const Qcm V = tmsv(9.0);
  const double m_local = half_log2_det(V.block({"A"}).matrix);
  CHECK(im_mutual(V, kAB) == doctest::Approx(2.0 * m_local).epsilon(1e-12));
}

TEST_CASE("homodyne limit on the TMSV") {
  // The limit equals the x-part mutual information of the xp-form state.
  const Qcm V = tmsv(7.0);
  const auto [ix, ip] = im_xp_decompose(V, kAB);
  const auto lim = homodyne_limit_im(V, kAB, {1e-1, 1e-2, 1e-3, 1e-4});
  CHECK(lim.value == doctest::Approx(ix).epsilon(1e-6));
  CHECK(lim.diagnostics.at("error_estimate") < 1e-2);
  CHECK_THROWS_AS(homodyne_limit_im(V, kAB, {1e-2}), InvalidInputError);
  CHECK_THROWS_AS(homodyne_limit_im(V, kAB, {1e-2, 1e-1}), InvalidInputError);
}

TEST_CASE("von Neumann entropy of a thermal state") {
  // nu = 3 corresponds to mean photon number 1: S = g(1) = 2 bits.
  const Qcm V(3.0 * Eigen::MatrixXd::Identity(2, 2), Partition{{"A", 1}});
  CHECK(von_neumann_entropy(V) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(von_neumann_entropy(tmsv(5.0)) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("split validation") {
  const Qcm V = tmsv(5.0);
  CHECK_THROWS_AS(im_mutual(V, Split{{"A"}, {"C"}}), PartitionError);
  CHECK_THROWS_AS(im_mutual(V, Split{{"A"}, {"A"}}), PartitionError);
  CHECK_THROWS_AS(im_mutual(V, Split{{}, {"B"}}), PartitionError);
}
