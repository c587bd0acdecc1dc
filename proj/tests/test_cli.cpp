#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "gqi/entanglement.hpp"
#include "gqi/io.hpp"
#include "gqi/model.hpp"

#ifndef GQI_CLI_PATH
#error "GQI_CLI_PATH must be defined by the build"
#endif

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout of the command
};

RunResult run_cli(const std::string& args) {
  const std::string out_path = "/tmp/gqi_cli_test_stdout.txt";
  const std::string cmd =
      std::string(GQI_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream f(out_path);
  std::stringstream ss;
  ss << f.rdbuf();
  r.output = ss.str();
  return r;
}

std::string write_state(const char* tag, const gqi::Qcm& V) {
  const std::string path = std::string("/tmp/gqi_cli_test_") + tag + ".json";
  gqi::write_qcm(V, path);
  return path;
}

}  // namespace

TEST_CASE("measure on a pure-loss state uses the closed form") {
  const std::string path = write_state("pl", gqi::pure_loss_state(0.7, 5.0));
  const auto r = run_cli("measure --input " + path + " --measures reof,dist");
  REQUIRE(r.exit_code == 0);
  const json rep = json::parse(r.output);
  CHECK(rep.at("reof").at("route") == "closed-form");
  CHECK(std::abs(rep.at("reof").at("value").get<double>() -
                 gqi::reof_closed_form(0.7, 5.0)) < 1e-12);
  CHECK(rep.at("pure_loss_fit").at("lambda").get<double>() ==
        doctest::Approx(0.7).epsilon(1e-9));
  CHECK(rep.at("d_one_way").get<double>() ==
        doctest::Approx(gqi::one_way_distillable(0.7, 5.0)).epsilon(1e-12));
  std::remove(path.c_str());
}

TEST_CASE("sweep emits the documented CSV header") {
  const auto r = run_cli("sweep --squeezing 5 --lambda-steps 3");
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(r.output);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "lambda,s_db,reof,d_one_way");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 3);
}

TEST_CASE("crossing reports the threshold constants") {
  const auto r = run_cli("crossing --squeezing 10");
  REQUIRE(r.exit_code == 0);
  const json rep = json::parse(r.output);
  CHECK(rep.at("s0_db").get<double>() == doctest::Approx(4.2184).epsilon(1e-3));
  CHECK(rep.at("sinh2_r0").get<double>() == doctest::Approx(0.255).epsilon(1e-2));
  REQUIRE(rep.at("lambda0").size() == 1);
  CHECK(rep.at("lambda0")[0].at("lambda0").get<double>() ==
        doctest::Approx(0.9123).epsilon(1e-3));
}

TEST_CASE("williamson and purify commands") {
  const std::string path = write_state("wm", gqi::tmsv(5.0));
  const auto r = run_cli("williamson --input " + path);
  REQUIRE(r.exit_code == 0);
  const json rep = json::parse(r.output);
  CHECK(rep.at("reconstruction_error").get<double>() < 1e-9);
  CHECK(rep.at("nu")[0].get<double>() == doctest::Approx(1.0).epsilon(1e-9));

  const std::string ppath = "/tmp/gqi_cli_test_purified.json";
  const auto rp = run_cli("purify --input " + path + " --out " + ppath);
  REQUIRE(rp.exit_code == 0);
  const gqi::Qcm P = gqi::read_qcm(ppath);
  CHECK(P.is_pure(1e-7));
  std::remove(path.c_str());
  std::remove(ppath.c_str());
}

TEST_CASE("exit codes for usage, input, and validation errors") {
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("measure").exit_code == 2);  // missing required --input
  CHECK(run_cli("measure --input /tmp/gqi_cli_test_missing.json").exit_code == 3);

  // Well-formed JSON failing the bona fide validation.
  const std::string bad = "/tmp/gqi_cli_test_bad.json";
  {
    std::ofstream f(bad);
    f << R"({"ordering":"xp","subsystems":[{"name":"A","modes":1},)"
      << R"({"name":"B","modes":1}],)"
      << R"("matrix":[[0.1,0,0,0],[0,0.1,0,0],[0,0,0.1,0],[0,0,0,0.1]]})";
  }
  CHECK(run_cli("measure --input " + bad).exit_code == 3);
  std::remove(bad.c_str());
}

TEST_CASE("verify exit status reflects suite results") {
  CHECK(run_cli("verify --suite schur --trials 25 --seed 2").exit_code == 0);
  CHECK(run_cli("verify --suite no-such-suite --trials 5").exit_code == 2);
}
