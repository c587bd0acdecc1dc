#pragma once

#include <functional>

#include <Eigen/Dense>

namespace gqi {

struct NelderMeadOptions {
  int max_evals = 20000;
  double init_step = 0.25;
  double xtol = 1e-10;   // simplex spread
  double ftol = 1e-12;   // function spread
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double f = 0.0;
  int evals = 0;
  bool converged = false;
};

// Standard Nelder-Mead simplex search. The objective may return +inf to
// reject infeasible points.
NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                             const Eigen::VectorXd& x0,
                             const NelderMeadOptions& opts = {});

}  // namespace gqi
