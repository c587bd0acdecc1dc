#include <doctest.h>

#include <cstdio>
#include <string>

#include "gqi/io.hpp"
#include "gqi/random.hpp"

using namespace gqi;

namespace {

std::string temp_path(const char* tag) {
  return std::string("/tmp/gqi_io_test_") + tag + ".json";
}

}  // namespace

TEST_CASE("json round trip preserves the matrix") {
  Rng rng(41);
  const Qcm V = random_qcm(rng, {{"A", 1}, {"B", 2}});
  for (Ordering ord : {Ordering::XpBlock, Ordering::ModeWise}) {
    const auto j = qcm_to_json(V, ord);
    const Qcm back = qcm_from_json(j);
    CHECK((back.matrix - V.matrix).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(back.partition.names() == V.partition.names());
  }
}

TEST_CASE("file round trip") {
  Rng rng(43);
  const Qcm V = random_qcm(rng, {{"A", 2}, {"B", 1}});
  const std::string path = temp_path("roundtrip");
  write_qcm(V, path, Ordering::ModeWise);
  const Qcm back = read_qcm(path);
  CHECK((back.matrix - V.matrix).cwiseAbs().maxCoeff() < 1e-15);
  std::remove(path.c_str());
}

TEST_CASE("validation errors name the failed check") {
  nlohmann::json j;
  j["ordering"] = "xp";
  j["subsystems"] = {{{"name", "A"}, {"modes", 1}}};
  j["matrix"] = {{1.0, 0.5}, {0.4, 1.0}};  // asymmetric
  CHECK_THROWS_WITH_AS(qcm_from_json(j), doctest::Contains("symmetr"),
                       InvalidInputError);

  j["matrix"] = {{0.1, 0.0}, {0.0, 0.1}};  // violates V + i*Omega >= 0
  CHECK_THROWS_WITH_AS(qcm_from_json(j), doctest::Contains("bona fide"),
                       InvalidInputError);

  j["matrix"] = {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};
  CHECK_THROWS_WITH_AS(qcm_from_json(j), doctest::Contains("dimension"),
                       InvalidInputError);

  j["matrix"] = {{1.0, 0.0}, {0.0, 1.0}};
  j["ordering"] = "diagonal-major";
  CHECK_THROWS_AS(qcm_from_json(j), InvalidInputError);
}

TEST_CASE("missing file is reported") {
  CHECK_THROWS(read_qcm("/tmp/gqi_io_test_does_not_exist.json"));
}
