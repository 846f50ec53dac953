#ifndef MRE_NELDER_MEAD_HPP
#define MRE_NELDER_MEAD_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

namespace mre {

struct NelderMeadOptions {
  int max_iterations = 2000;
  double tolerance = 1e-8;
  double initial_step = 0.3;
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Downhill simplex with the standard reflection/expansion/contraction/shrink
/// coefficients. Deterministic for a given starting point.
template <class F>
NelderMeadResult nelder_mead(F&& f, const Eigen::VectorXd& x0,
                             const NelderMeadOptions& opt = {}) {
  const int n = static_cast<int>(x0.size());
  std::vector<Eigen::VectorXd> simplex(n + 1, x0);
  std::vector<double> val(n + 1);
  for (int i = 0; i < n; ++i) simplex[i + 1](i) += opt.initial_step;
  for (int i = 0; i <= n; ++i) val[i] = f(simplex[i]);

  std::vector<int> order(n + 1);
  NelderMeadResult res;
  int iter = 0;
  for (; iter < opt.max_iterations; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return val[a] < val[b]; });
    int best = order[0], worst = order[n], second = order[n - 1];
    if (val[worst] - val[best] < opt.tolerance * (1.0 + std::abs(val[best]))) {
      res.converged = true;
      break;
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i <= n; ++i)
      if (i != worst) centroid += simplex[i];
    centroid /= n;

    Eigen::VectorXd xr = centroid + (centroid - simplex[worst]);
    double fr = f(xr);
    if (fr < val[best]) {
      Eigen::VectorXd xe = centroid + 2.0 * (centroid - simplex[worst]);
      double fe = f(xe);
      if (fe < fr) {
        simplex[worst] = xe;
        val[worst] = fe;
      } else {
        simplex[worst] = xr;
        val[worst] = fr;
      }
    } else if (fr < val[second]) {
      simplex[worst] = xr;
      val[worst] = fr;
    } else {
      bool outside = fr < val[worst];
      Eigen::VectorXd xc =
          outside ? Eigen::VectorXd(centroid + 0.5 * (xr - centroid))
                  : Eigen::VectorXd(centroid - 0.5 * (centroid - simplex[worst]));
      double fc = f(xc);
      if (fc < (outside ? fr : val[worst])) {
        simplex[worst] = xc;
        val[worst] = fc;
      } else {
        for (int i = 0; i <= n; ++i) {
          if (i == best) continue;
          simplex[i] = simplex[best] + 0.5 * (simplex[i] - simplex[best]);
          val[i] = f(simplex[i]);
        }
      }
    }
  }

  int best = static_cast<int>(
      std::min_element(val.begin(), val.end()) - val.begin());
  res.x = simplex[best];
  res.value = val[best];
  res.iterations = iter;
  return res;
}

}  // namespace mre

#endif
