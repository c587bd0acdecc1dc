#include "gqi/optim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace gqi {

NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                             const Eigen::VectorXd& x0,
                             const NelderMeadOptions& opts) {
  const int n = static_cast<int>(x0.size());
  const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;

  int evals = 0;
  auto eval = [&](const Eigen::VectorXd& x) {
    ++evals;
    const double v = f(x);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };

  std::vector<Eigen::VectorXd> xs(n + 1, x0);
  std::vector<double> fs(n + 1);
  fs[0] = eval(xs[0]);
  for (int i = 0; i < n; ++i) {
    xs[i + 1](i) += opts.init_step;
    fs[i + 1] = eval(xs[i + 1]);
  }
  std::vector<int> order(n + 1);

  NelderMeadResult res;
  while (evals < opts.max_evals) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return fs[a] < fs[b]; });
    const int best = order[0], worst = order[n], second_worst = order[n - 1];

    // Convergence: simplex small in both x and f.
    double xspread = 0.0;
    for (int i = 1; i <= n; ++i) {
      xspread = std::max(xspread, (xs[order[i]] - xs[best]).cwiseAbs().maxCoeff());
    }
    const double fspread = std::abs(fs[worst] - fs[best]);
    if (xspread < opts.xtol && fspread < opts.ftol) {
      res.converged = true;
      break;
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i <= n; ++i) {
      if (i != worst) centroid += xs[i];
    }
    centroid /= n;

    const Eigen::VectorXd xr = centroid + alpha * (centroid - xs[worst]);
    const double fr = eval(xr);
    if (fr < fs[best]) {
      const Eigen::VectorXd xe = centroid + gamma * (xr - centroid);
      const double fe = eval(xe);
      if (fe < fr) {
        xs[worst] = xe;
        fs[worst] = fe;
      } else {
        xs[worst] = xr;
        fs[worst] = fr;
      }
    } else if (fr < fs[second_worst]) {
      xs[worst] = xr;
      fs[worst] = fr;
    } else {
      const bool outside = fr < fs[worst];
      const Eigen::VectorXd xc =
          outside ? Eigen::VectorXd(centroid + rho * (xr - centroid))
                  : Eigen::VectorXd(centroid - rho * (centroid - xs[worst]));
      const double fc = eval(xc);
      if (fc < std::min(fr, fs[worst])) {
        xs[worst] = xc;
        fs[worst] = fc;
      } else {
        // Shrink toward the best vertex.
        for (int i = 0; i <= n; ++i) {
          if (i == best) continue;
          xs[i] = xs[best] + sigma * (xs[i] - xs[best]);
          fs[i] = eval(xs[i]);
        }
      }
    }
  }

  const int best = static_cast<int>(
      std::min_element(fs.begin(), fs.end()) - fs.begin());
  res.x = xs[best];
  res.f = fs[best];
  res.evals = evals;
  return res;
}

}  // namespace gqi
