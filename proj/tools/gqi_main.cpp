// gqi: covariance-matrix entanglement measures and key-rate bounds.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gqi/entanglement.hpp"
#include "gqi/infomeasures.hpp"
#include "gqi/io.hpp"
#include "gqi/model.hpp"
#include "gqi/normality.hpp"
#include "gqi/symplectic.hpp"
#include "gqi/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitNumeric = 4;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

json error_json(const std::string& kind, const std::string& what) {
  return json{{"error", kind}, {"message", what}};
}

// First-named subsystem vs the rest.
gqi::Split default_split(const gqi::Partition& part) {
  const auto names = part.names();
  gqi::Split split;
  split.a = {names.front()};
  split.b.assign(names.begin() + 1, names.end());
  return split;
}

json matrix_to_json(const Eigen::MatrixXd& M) {
  json rows = json::array();
  for (int i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < M.cols(); ++j) row.push_back(M(i, j));
    rows.push_back(row);
  }
  return rows;
}

int cmd_measure(const std::string& input, const std::string& out,
                const std::vector<std::string>& measures, std::uint64_t seed) {
  const gqi::Qcm V = gqi::read_qcm(input);
  if (V.partition.size() < 2) {
    throw gqi::PartitionError("measure: input needs at least two subsystems");
  }
  const gqi::Split split = default_split(V.partition);
  gqi::OptimOptions opts;
  opts.seed = seed;

  auto wants = [&](const std::string& m) {
    return std::find(measures.begin(), measures.end(), m) != measures.end();
  };

  json report;
  report["input"] = input;
  report["seed"] = seed;
  report["split"] = {{"a", split.a}, {"b", split.b}};
  report["im_mutual"] = gqi::im_mutual(V, split);

  const auto fit = gqi::fit_pure_loss(V);
  if (fit) {
    report["pure_loss_fit"] = {{"lambda", fit->first}, {"s_db", fit->second}};
  }
  if (wants("reof")) {
    if (fit) {
      report["reof"] = {{"value", gqi::reof_closed_form(fit->first, fit->second)},
                        {"route", "closed-form"}};
    } else {
      const auto r = gqi::reof_numeric(V, split, opts);
      report["reof"] = {{"value", r.value},
                        {"route", "numeric"},
                        {"converged", r.converged},
                        {"feasibility_residual", r.feasibility_residual},
                        {"restarts", r.restarts}};
    }
  }
  if (wants("gie")) {
    const auto g = gqi::gie_numeric(V, split, opts);
    report["gie"] = {{"lower", g.lower},
                     {"upper", g.upper},
                     {"diagnostics", g.diagnostics}};
  }
  if (wants("bounds")) {
    const auto kb = gqi::key_bounds(V, split, opts);
    report["bounds"] = {{"reof", kb.reof},
                        {"one_way", kb.one_way_bound},
                        {"two_way", kb.two_way_bound},
                        {"glmpc", kb.glmpc_bound},
                        {"gie_lower", kb.gie_lower},
                        {"closed_form", kb.used_closed_form}};
  }
  if (wants("dist")) {
    if (fit) {
      report["d_one_way"] = gqi::one_way_distillable(fit->first, fit->second);
    } else {
      report["d_one_way"] = nullptr;
      report["d_one_way_note"] =
          "closed form available only for the pure-loss family";
    }
  }
  emit(report.dump(2), out);
  return kExitOk;
}

int cmd_sweep(const std::vector<double>& s_list, int lambda_steps,
              const std::string& out, bool with_gie, std::uint64_t seed) {
  std::ostringstream csv;
  csv << "lambda,s_db,reof,d_one_way";
  if (with_gie) csv << ",gie_lower,gie_upper";
  csv << '\n';
  for (double s : s_list) {
    for (int i = 0; i < lambda_steps; ++i) {
      const double lambda =
          static_cast<double>(i) / static_cast<double>(lambda_steps - 1);
      csv << fmt17(lambda) << ',' << fmt17(s) << ','
          << fmt17(gqi::reof_closed_form(lambda, s)) << ','
          << fmt17(gqi::one_way_distillable(lambda, s));
      if (with_gie) {
        gqi::OptimOptions opts;
        opts.seed = seed;
        const auto g =
            gqi::gie_numeric(gqi::pure_loss_state(lambda, s),
                             gqi::Split{{"A"}, {"B"}}, opts);
        csv << ',' << fmt17(g.lower) << ',' << fmt17(g.upper);
      }
      csv << '\n';
    }
  }
  emit(csv.str(), out);
  return kExitOk;
}

int cmd_verify(const std::string& suite, int trials, std::uint64_t seed) {
  std::vector<gqi::LawResult> all;
  auto run = [&](const std::string& name) {
    if (suite != "all" && suite != name) return;
    std::vector<gqi::LawResult> laws;
    if (name == "schur") laws = gqi::verify_schur(trials, seed);
    if (name == "symplectic") laws = gqi::verify_symplectic(trials, seed);
    if (name == "infomeasures") laws = gqi::verify_infomeasures(trials, seed);
    if (name == "conjecture") laws = gqi::verify_conjecture(trials, seed);
    for (auto& l : laws) l.name = name + "/" + l.name;
    all.insert(all.end(), laws.begin(), laws.end());
  };
  run("schur");
  run("symplectic");
  run("infomeasures");
  run("conjecture");
  if (all.empty()) {
    std::cerr << error_json("usage", "unknown suite: " + suite).dump() << '\n';
    return kExitUsage;
  }
  bool ok = true;
  for (const auto& law : all) {
    if (law.passed()) {
      std::cout << law.name << ": pass (" << law.trials << " trials)\n";
    } else {
      ok = false;
      std::cout << law.name << ": FAIL (" << law.failures << "/" << law.trials
                << ") replay: " << law.first_failure << '\n';
    }
  }
  return ok ? kExitOk : kExitVerifyFail;
}

int cmd_williamson(const std::string& input, const std::string& out) {
  const gqi::Qcm V = gqi::read_qcm(input);
  const auto wd = gqi::williamson(V.matrix);
  json report;
  report["S"] = matrix_to_json(wd.S);
  json nu = json::array();
  for (int i = 0; i < wd.nu.size(); ++i) nu.push_back(wd.nu(i));
  report["nu"] = nu;
  report["reconstruction_error"] =
      (wd.reconstruct() - V.matrix).cwiseAbs().maxCoeff();
  emit(report.dump(2), out);
  return kExitOk;
}

int cmd_purify(const std::string& input, const std::string& out) {
  const gqi::Qcm V = gqi::read_qcm(input);
  gqi::write_qcm(gqi::purify(V), out);
  return kExitOk;
}

int cmd_crossing(const std::vector<double>& s_list, const std::string& out) {
  const auto ca = s_list.empty() ? gqi::crossing_analysis()
                                 : gqi::crossing_analysis(s_list);
  json report;
  report["r0"] = ca.r0;
  report["sinh2_r0"] = ca.sinh2_r0;
  report["s0_db"] = ca.s0_db;
  json table = json::array();
  for (const auto& [s, l0] : ca.lambda0) {
    table.push_back({{"s_db", s}, {"lambda0", l0}});
  }
  report["lambda0"] = table;
  emit(report.dump(2), out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian covariance-matrix entanglement measures and "
               "secret-key bounds"};
  app.require_subcommand(1);

  std::string input, out;
  std::uint64_t seed = 0;
  int trials = 0;
  int lambda_steps = 500;
  std::vector<double> squeezing = {2.0, 5.0, 10.0, 15.0};
  std::vector<std::string> measures = {"reof", "gie", "bounds", "dist"};
  std::string suite = "all";
  bool with_gie = false;

  auto* m = app.add_subcommand("measure", "Compute measures for a QCM file");
  m->add_option("--input", input, "QCM JSON file")->required();
  m->add_option("--out", out, "Output path (default: stdout)");
  m->add_option("--seed", seed, "Optimizer seed");
  m->add_option("--measures", measures, "Subset of reof,gie,bounds,dist")
      ->delimiter(',');

  auto* s = app.add_subcommand("sweep", "Pure-loss family sweep to CSV");
  s->add_option("--squeezing", squeezing, "Squeezing values in dB")
      ->delimiter(',');
  s->add_option("--lambda-steps", lambda_steps, "Grid points in lambda")
      ->check(CLI::Range(2, 1000000));
  s->add_option("--out", out, "Output path (default: stdout)");
  s->add_option("--seed", seed, "Optimizer seed");
  s->add_flag("--gie", with_gie, "Also compute gie columns (slow)");

  auto* v = app.add_subcommand("verify", "Run property suites");
  v->add_option("--suite", suite,
                "schur|symplectic|infomeasures|conjecture|all");
  v->add_option("--trials", trials, "Random instances per suite")
      ->required()
      ->check(CLI::PositiveNumber);
  v->add_option("--seed", seed, "RNG seed");

  auto* w = app.add_subcommand("williamson", "Williamson decomposition");
  w->add_option("--input", input, "QCM JSON file")->required();
  w->add_option("--out", out, "Output path (default: stdout)");

  auto* p = app.add_subcommand("purify", "Write a purification QCM file");
  p->add_option("--input", input, "QCM JSON file")->required();
  p->add_option("--out", out, "Output path")->required();

  auto* c = app.add_subcommand("crossing", "Threshold and crossing analysis");
  c->add_option("--squeezing", squeezing, "Squeezing values in dB")
      ->delimiter(',');
  c->add_option("--out", out, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (m->parsed()) return cmd_measure(input, out, measures, seed);
    if (s->parsed()) {
      return cmd_sweep(squeezing, lambda_steps, out, with_gie, seed);
    }
    if (v->parsed()) return cmd_verify(suite, trials, seed);
    if (w->parsed()) return cmd_williamson(input, out);
    if (p->parsed()) return cmd_purify(input, out);
    if (c->parsed()) return cmd_crossing(squeezing, out);
  } catch (const gqi::InvalidInputError& e) {
    std::cerr << error_json("input-validation", e.what()).dump() << '\n';
    return kExitInput;
  } catch (const gqi::PartitionError& e) {
    std::cerr << error_json("input-validation", e.what()).dump() << '\n';
    return kExitInput;
  } catch (const gqi::InvalidShapeError& e) {
    std::cerr << error_json("input-validation", e.what()).dump() << '\n';
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << error_json("input-validation", e.what()).dump() << '\n';
    return kExitInput;
  } catch (const gqi::NumericError& e) {
    std::cerr << error_json("numeric", e.what()).dump() << '\n';
    return kExitNumeric;
  } catch (const gqi::ConvergenceError& e) {
    std::cerr << error_json("numeric", e.what()).dump() << '\n';
    return kExitNumeric;
  } catch (const gqi::SingularBlockError& e) {
    std::cerr << error_json("numeric", e.what()).dump() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << error_json("io", e.what()).dump() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}
