#include "mre/closedform.hpp"

#include <cmath>
#include <stdexcept>

namespace mre {

namespace {

constexpr double kLog2e = 1.4426950408889634;

double xlogx(double x) { return x > 0.0 ? x * std::log(x) * kLog2e : 0.0; }

}  // namespace

DensityMatrix werner_relative_state(double f) {
  if (f < 0.0 || f > 1.0)
    throw std::invalid_argument("werner_relative_state: F must lie in [0,1]");
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = (1.0 - f) / 3.0;
  m(1, 1) = (1.0 + 2.0 * f) / 6.0;
  m(2, 2) = (1.0 + 2.0 * f) / 6.0;
  m(3, 3) = (1.0 - f) / 3.0;
  return DensityMatrix::trusted(std::move(m));
}

double werner_mre(double f, bool raw) {
  if (f < 0.0 || f > 1.0) throw std::invalid_argument("werner_mre: F must lie in [0,1]");
  double value = xlogx(f) + xlogx((1.0 - f) / 3.0) -
                 (1.0 + 2.0 * f) / 3.0 * std::log((1.0 + 2.0 * f) / 6.0) * kLog2e;
  if (raw) return value;
  if (f < 0.25) return 0.0;
  return std::max(value, 0.0);
}

std::array<double, 4> ext_werner_eigenvalues(const ExtWernerParams& p) {
  p.check();
  double g1 = std::hypot(p.b[0] - p.b[1], p.c[0] - p.c[3]);
  double g2 = std::hypot(p.b[2] - p.b[3], p.c[1] - p.c[2]);
  double s1 = p.b[0] + p.b[1] + p.c[0] + p.c[3];
  double s2 = p.b[2] + p.b[3] + p.c[1] + p.c[2];
  return {(s1 - g1) / 2.0, (s1 + g1) / 2.0, (s2 - g2) / 2.0, (s2 + g2) / 2.0};
}

double ext_werner_mre(const ExtWernerParams& p) {
  auto v = ext_werner_eigenvalues(p);
  // Diagonal of the definitional relative state R_M. The third entry uses
  // the symmetrized b3+b4+2c3 form.
  std::array<double, 4> d = {
      (p.b[0] + p.b[1] + 2.0 * p.c[0]) / 2.0,
      (p.b[2] + p.b[3] + 2.0 * p.c[1]) / 2.0,
      (p.b[2] + p.b[3] + 2.0 * p.c[2]) / 2.0,
      (p.b[0] + p.b[1] + 2.0 * p.c[3]) / 2.0,
  };
  double value = 0.0;
  for (double x : v) value += xlogx(std::max(x, 0.0));
  for (double x : d) value -= xlogx(x);
  return std::max(value, 0.0);
}

bool ext_werner_separable(const ExtWernerParams& p) {
  p.check();
  // Exact block conditions for a positive partial transpose. Expanding
  // (b1+b2+c1+c4)^2 - (c1-c4)^2 gives (b1+b2)^2 + 2(b1+b2)(c1+c4) + 4 c1 c4,
  // so these reduce to the shorter two-term inequalities whenever the cross
  // term vanishes (in particular for the plain Werner line).
  double lhs1 = (p.b[0] + p.b[1] + p.c[0] + p.c[3]) *
                (p.b[0] + p.b[1] + p.c[0] + p.c[3]);
  double rhs1 = (p.b[2] - p.b[3]) * (p.b[2] - p.b[3]) +
                (p.c[0] - p.c[3]) * (p.c[0] - p.c[3]);
  double lhs2 = (p.b[2] + p.b[3] + p.c[1] + p.c[2]) *
                (p.b[2] + p.b[3] + p.c[1] + p.c[2]);
  double rhs2 = (p.b[0] - p.b[1]) * (p.b[0] - p.b[1]) +
                (p.c[1] - p.c[2]) * (p.c[1] - p.c[2]);
  return lhs1 >= rhs1 - 1e-12 && lhs2 >= rhs2 - 1e-12;
}

WernerReport werner_report(double f) {
  ExtWernerParams p = ExtWernerParams::from_werner(f);
  return {f, werner_mre(f), werner_relative_state(f), ext_werner_separable(p)};
}

}  // namespace mre
