#ifndef MRE_CLOSEDFORM_HPP
#define MRE_CLOSEDFORM_HPP

#include <array>

#include "mre/states.hpp"

namespace mre {

/// Diagonal relative state of the Werner family:
/// {(1-F)/3, (1+2F)/6, (1+2F)/6, (1-F)/3}.
DensityMatrix werner_relative_state(double f);

/// Closed-form Werner MRE in bits. Below F = 1/4 the clamped value is 0;
/// `raw` exposes the unclamped expression for reproduction plots.
double werner_mre(double f, bool raw = false);

/// The four extended-Werner eigenvalues in the fixed order
/// (v1, v2) from the {00,11} block, (v3, v4) from the {01,10} block.
std::array<double, 4> ext_werner_eigenvalues(const ExtWernerParams& p);

/// Closed-form extended-Werner MRE in bits, clamped at 0.
double ext_werner_mre(const ExtWernerParams& p);

/// Separability of the extended Werner state (positivity of both partial-
/// transpose blocks): (b1+b2+c1+c4)^2 >= (b3-b4)^2 + (c1-c4)^2 and
/// (b3+b4+c2+c3)^2 >= (b1-b2)^2 + (c2-c3)^2.
bool ext_werner_separable(const ExtWernerParams& p);

struct WernerReport {
  double f;
  double mre;
  DensityMatrix relative_state;
  bool separable;
};

WernerReport werner_report(double f);

}  // namespace mre

#endif
