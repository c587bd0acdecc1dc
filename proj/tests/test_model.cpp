#include <doctest.h>

#include <cmath>

#include "gqi/model.hpp"
#include "gqi/qcm.hpp"
#include "gqi/random.hpp"
#include "gqi/symplectic.hpp"

using namespace gqi;

TEST_CASE("tmsv structure") {
  const double s = 5.0;
  const double r = squeeze_param(s);
  const Qcm V = tmsv(s);
  REQUIRE(V.modes() == 2);
  CHECK(V.is_pure());
  CHECK(V.matrix(0, 0) == doctest::Approx(std::cosh(2 * r)).epsilon(1e-14));
  CHECK(V.matrix(0, 1) == doctest::Approx(std::sinh(2 * r)).epsilon(1e-14));
  // sigma_z coupling: the p-block coupling has opposite sign.
  CHECK(V.matrix(2, 3) == doctest::Approx(-std::sinh(2 * r)).epsilon(1e-14));
  CHECK(V.bona_fide_violation() < 1e-12);
}

TEST_CASE("pure-loss state matches the channel route") {
  const double lambda = 0.73, s = 7.0;
  const Qcm direct = pure_loss_state(lambda, s);
  const Qcm routed =
      channel_apply(GaussianChannel::pure_loss(lambda), tmsv(s), "A");
  CHECK((direct.matrix - routed.matrix).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(direct.bona_fide_violation() < 1e-12);
  // Limits: lambda=1 returns the TMSV, lambda=0 decouples A into vacuum.
  CHECK((pure_loss_state(1.0, s).matrix - tmsv(s).matrix).cwiseAbs().maxCoeff() <
        1e-12);
  const Qcm dark = pure_loss_state(0.0, s);
  CHECK(dark.matrix(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(dark.matrix(0, 1) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("channel composition and cp certification") {
  const auto l1 = GaussianChannel::pure_loss(0.8);
  const auto l2 = GaussianChannel::pure_loss(0.5);
  const auto both = l1.compose(l2);
  CHECK(both.cp_violation() < 1e-12);
  // Loss channels compose multiplicatively in transmissivity.
  const auto once = GaussianChannel::pure_loss(0.4);
  CHECK((both.X - once.X).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((both.Y - once.Y).cwiseAbs().maxCoeff() < 1e-12);

  GaussianChannel bad;
  bad.X = 2.0 * Eigen::MatrixXd::Identity(2, 2);
  bad.Y = Eigen::MatrixXd::Zero(2, 2);
  CHECK(bad.cp_violation() > 1.0);
  CHECK_THROWS_AS(bad.require_cp(), ChannelError);
}

TEST_CASE("purify round trip") {
  Rng rng(17);
  const Qcm V = random_qcm(rng, {{"A", 1}, {"B", 2}});
  const Qcm P = purify(V, "E");
  CHECK(P.modes() == 2 * V.modes());
  CHECK(P.is_pure(1e-7));
  const Qcm back = P.block({"A", "B"});
  CHECK((back.matrix - V.matrix).cwiseAbs().maxCoeff() < 1e-9);
  CHECK_THROWS_AS(purify(V, "A"), PartitionError);
}

TEST_CASE("heterodyne measurement of a TMSV leaves a coherent-state marginal") {
  // Seed = identity (heterodyne): the conditional state on B is the vacuum.
  const Qcm V = tmsv(8.0);
  const Qcm seed(Eigen::MatrixXd::Identity(2, 2), Partition{{"A", 1}});
  const Qcm post = measurement_update(V, seed);
  REQUIRE(post.modes() == 1);
  CHECK((post.matrix - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() <
        1e-10);
}

TEST_CASE("homodyne seed and add_seed embedding") {
  const Eigen::MatrixXd h = homodyne_seed(0.1, 1);
  CHECK(h(0, 0) == doctest::Approx(0.1));
  CHECK(h(1, 1) == doctest::Approx(10.0));
  CHECK(is_pure_qcm(h));
  const Qcm V = tmsv(5.0);
  const Qcm seeded = add_seed(V, "B", h);
  CHECK(seeded.matrix(1, 1) == doctest::Approx(V.matrix(1, 1) + 0.1));
  CHECK(seeded.matrix(0, 0) == doctest::Approx(V.matrix(0, 0)));
  CHECK_THROWS_AS(homodyne_seed(0.0, 1), InvalidInputError);
  CHECK_THROWS_AS(add_seed(V, "C", h), PartitionError);
}
