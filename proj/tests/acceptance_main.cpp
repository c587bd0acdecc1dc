// Acceptance harness: `gqi_acceptance N` runs criterion N (1..8), prints a
// single "criterion N: pass|FAIL (detail)" line, and exits nonzero on failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "gqi/entanglement.hpp"
#include "gqi/infomeasures.hpp"
#include "gqi/model.hpp"
#include "gqi/normality.hpp"
#include "gqi/random.hpp"
#include "gqi/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;
const gqi::Split kAB{{"A"}, {"B"}};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void note(const std::string& what) {
    if (ok) detail = what;
  }
};

// Criterion 1: crossing structure of the closed-form curves.
Outcome criterion1() {
  Outcome out;
  const auto t0 = Clock::now();
  const std::vector<double> s_list = {2.0, 5.0, 10.0, 15.0};
  const int steps = 500;

  // Sweep grid: count sign changes of reof - d_one_way per squeezing value.
  for (double s : s_list) {
    int crossings = 0;
    double prev = 0.0;
    for (int i = 0; i < steps; ++i) {
      const double lambda = static_cast<double>(i) / (steps - 1);
      const double diff =
          gqi::reof_closed_form(lambda, s) - gqi::one_way_distillable(lambda, s);
      if (i > 0 && prev > 0.0 && diff < 0.0) ++crossings;
      prev = diff;
    }
    if (s == 2.0) {
      out.require(crossings == 0, "unexpected crossing at s = 2 dB");
    } else {
      out.require(crossings == 1, "missing crossing at s > s0");
    }
  }

  const auto ca = gqi::crossing_analysis({10.0});
  out.require(std::abs(ca.lambda0.at(0).second - 0.912) <= 0.005,
              "lambda0(10 dB) outside 0.912 +/- 0.005");
  out.require(std::abs(ca.s0_db - 4.22) <= 0.05, "s0 outside 4.22 +/- 0.05");
  out.require(std::abs(ca.sinh2_r0 - 0.255) <= 0.002,
              "sinh^2 r0 outside 0.255 +/- 0.002");
  const double dt = seconds_since(t0);
  out.require(dt < 5.0, "runtime exceeded 5 s");
  std::ostringstream d;
  d << "lambda0(10dB)=" << ca.lambda0.at(0).second << ", s0=" << ca.s0_db
    << " dB, sinh^2 r0=" << ca.sinh2_r0 << ", " << dt << " s";
  out.note(d.str());
  return out;
}

// Criterion 2: optimizer vs closed form on the 30-point grid.
Outcome criterion2() {
  Outcome out;
  const auto t0 = Clock::now();
  double worst_primal = 0.0, worst_squashed = 0.0;
  for (int li = 1; li <= 10; ++li) {
    const double lambda = 0.1 * li;
    for (double s : {2.0, 5.0, 10.0}) {
      const gqi::Qcm V = gqi::pure_loss_state(lambda, s);
      const double cf = gqi::reof_closed_form(lambda, s);
      gqi::OptimOptions opts;
      opts.seed = 1000 + li;
      worst_primal = std::max(
          worst_primal, std::abs(gqi::reof_numeric(V, kAB, opts).value - cf));
      worst_squashed = std::max(
          worst_squashed, std::abs(gqi::reof_squashed(V, kAB, opts).value - cf));
    }
  }
  out.require(worst_primal < 1e-3, "primal deviation >= 1e-3 bits");
  out.require(worst_squashed < 1e-3, "squashed deviation >= 1e-3 bits");
  const double dt = seconds_since(t0);
  out.require(dt < 120.0, "runtime exceeded 2 min");
  std::ostringstream d;
  d << "max |primal-cf|=" << worst_primal << ", max |squashed-cf|="
    << worst_squashed << ", " << dt << " s";
  out.note(d.str());
  return out;
}

// Criterion 3: gie brackets reof within 2e-2 on 50 random two-mode states.
Outcome criterion3() {
  Outcome out;
  const auto t0 = Clock::now();
  gqi::Rng rng(20240817);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const gqi::Qcm V = gqi::random_two_mode_qcm(rng);
    gqi::OptimOptions opts;
    opts.seed = 40 + t;
    const double e = gqi::reof_numeric(V, kAB, opts).value;
    const auto g = gqi::gie_numeric(V, kAB, opts);
    const double bracket =
        std::max(std::abs(g.upper - e), std::abs(e - g.lower));
    worst = std::max(worst, bracket);
  }
  out.require(worst <= 2e-2, "bracket width exceeded 2e-2 bits");
  const double dt = seconds_since(t0);
  out.require(dt < 600.0, "runtime exceeded 10 min");
  std::ostringstream d;
  d << "worst bracket=" << worst << " bits over 50 states, " << dt << " s";
  out.note(d.str());
  return out;
}

// Criterion 4: upper estimate never exceeds reof + 1e-2 on (1+2)-mode states.
Outcome criterion4() {
  Outcome out;
  gqi::Rng rng(905);
  double worst = -1.0;
  for (int t = 0; t < 20; ++t) {
    const gqi::Qcm V = gqi::random_qcm(rng, {{"A", 1}, {"B", 2}});
    gqi::OptimOptions opts;
    opts.seed = 300 + t;
    const double e = gqi::reof_numeric(V, kAB, opts).value;
    const auto g = gqi::gie_numeric(V, kAB, opts);
    worst = std::max(worst, g.upper - e);
  }
  out.require(worst <= 1e-2, "gie upper exceeded reof + 1e-2");
  std::ostringstream d;
  d << "max (upper - reof)=" << worst << " bits over 20 states";
  out.note(d.str());
  return out;
}

// Criterion 5: degradability certificate on a 20x20 grid.
Outcome criterion5() {
  Outcome out;
  double worst_res = 0.0, worst_margin = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double lambda = (i + 1) / 21.0;
    for (int j = 0; j < 20; ++j) {
      const double s = 0.5 + 15.0 * j / 19.0;
      const auto cert = gqi::degradability_certificate(lambda, s);
      const double r = gqi::squeeze_param(s);
      const double expect = 2.0 * (1.0 - lambda) * std::pow(std::tanh(r), 2);
      worst_res = std::max(worst_res, cert.residual);
      worst_margin = std::max(worst_margin, std::abs(cert.cp_margin - expect));
    }
  }
  out.require(worst_res < 1e-10, "residual >= 1e-10");
  out.require(worst_margin < 1e-12, "CP margin mismatch >= 1e-12");
  std::ostringstream d;
  d << "max residual=" << worst_res << ", max margin mismatch=" << worst_margin;
  out.note(d.str());
  return out;
}

// Criterion 6: structural law suites, 200 trials, zero failures, < 1 min.
Outcome criterion6() {
  Outcome out;
  const auto t0 = Clock::now();
  std::vector<gqi::LawResult> all;
  for (auto laws : {gqi::verify_schur(200, 7), gqi::verify_symplectic(200, 7),
                    gqi::verify_infomeasures(200, 7)}) {
    all.insert(all.end(), laws.begin(), laws.end());
  }
  int failures = 0;
  std::string first;
  for (const auto& law : all) {
    if (!law.passed()) {
      ++failures;
      if (first.empty()) first = law.name + " (" + law.first_failure + ")";
    }
  }
  out.require(failures == 0, "law failures: " + first);
  const double dt = seconds_since(t0);
  out.require(dt < 60.0, "runtime exceeded 1 min");
  std::ostringstream d;
  d << all.size() << " laws x 200 trials, zero failures, " << dt << " s";
  out.note(d.str());
  return out;
}

// Criterion 7: additivity on two copies.
Outcome criterion7() {
  Outcome out;
  gqi::OptimOptions opts;
  opts.seed = 11;
  const double dev_tmsv = gqi::additivity_check(gqi::tmsv(5.0), kAB, 2, opts);
  const double dev_loss =
      gqi::additivity_check(gqi::pure_loss_state(0.5, 5.0), kAB, 2, opts);
  out.require(dev_tmsv < 5e-3, "TMSV deviation >= 5e-3 bits");
  out.require(dev_loss < 5e-3, "pure-loss deviation >= 5e-3 bits");
  std::ostringstream d;
  d << "dev(tmsv 5dB)=" << dev_tmsv << ", dev(V_{0.5,5dB})=" << dev_loss;
  out.note(d.str());
  return out;
}

// Criterion 8: non-normal certificate and two-mode normality.
Outcome criterion8() {
  Outcome out;
  Eigen::Matrix2d F, G;
  F << 1.0, 0.0, 0.0, 0.0;
  G << 0.5, 0.5, 0.5, 0.5;
  const auto [V, rep] = gqi::non_normal_family(3.0, 2.0, 3.0, F, G);
  out.require(rep.certificate == gqi::NormalityCertificate::ObstructionFound,
              "family instance not flagged as non-normal");

  gqi::Rng rng(77);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const auto r = gqi::is_normal(gqi::random_two_mode_qcm(rng), kAB);
    worst = std::max(worst, r.residual);
    out.require(r.residual < 1e-7, "two-mode residual >= 1e-7");
  }
  std::ostringstream d;
  d << "obstruction=(" << rep.obstruction->first << ", "
    << rep.obstruction->second << "), max two-mode residual=" << worst;
  out.note(d.str());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: gqi_acceptance <criterion 1..8>\n");
    return 2;
  }
  const int n = std::atoi(argv[1]);
  Outcome out;
  switch (n) {
    case 1: out = criterion1(); break;
    case 2: out = criterion2(); break;
    case 3: out = criterion3(); break;
    case 4: out = criterion4(); break;
    case 5: out = criterion5(); break;
    case 6: out = criterion6(); break;
    case 7: out = criterion7(); break;
    case 8: out = criterion8(); break;
    default:
      std::fprintf(stderr, "usage: gqi_acceptance <criterion 1..8>\n");
      return 2;
  }
  std::printf("criterion %d: %s (%s)\n", n, out.ok ? "pass" : "FAIL",
              out.detail.c_str());
  return out.ok ? 0 : 1;
}
