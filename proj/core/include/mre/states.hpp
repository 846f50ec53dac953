#ifndef MRE_STATES_HPP
#define MRE_STATES_HPP

#include <array>
#include <stdexcept>
#include <string>

#include "mre/qmat.hpp"

namespace mre {

class validation_error : public std::runtime_error {
 public:
  enum class Kind { dimension, non_hermitian, trace, negative_eigenvalue, not_normalized };

  validation_error(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Validated Hermitian, unit-trace, positive-semidefinite state (4x4 or 2x2).
class DensityMatrix {
 public:
  /// Rejects invalid input; never repairs it.
  static DensityMatrix validate(const CMatrix& m, double tol = 1e-10);

  /// Wraps a matrix known valid by construction. No checks.
  static DensityMatrix trusted(CMatrix m) { return DensityMatrix(std::move(m)); }

  const CMatrix& matrix() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }

 private:
  explicit DensityMatrix(CMatrix m) : m_(std::move(m)) {}
  CMatrix m_;
};

/// Normalized two-qubit state a|00> + b|01> + c|10> + d|11>.
struct PureState {
  Eigen::Vector4cd amp;

  Complex a() const { return amp(0); }
  Complex b() const { return amp(1); }
  Complex c() const { return amp(2); }
  Complex d() const { return amp(3); }

  CMatrix projector() const { return amp * amp.adjoint(); }

  /// Checks normalization to `tol`, throws validation_error otherwise.
  static PureState normalized(const Eigen::Vector4cd& v, double tol = 1e-12);
};

enum class Bell { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

PureState bell(Bell kind);

/// Computational basis state |i>, i in 0..3 labeling |00>,|01>,|10>,|11>.
PureState basis_state(int i);

struct ExtWernerParams {
  std::array<double, 4> b{};  // weights on Phi+, Phi-, Psi+, Psi-
  std::array<double, 4> c{};  // weights on |00>,|01>,|10>,|11>

  /// All weights >= 0 and total weight 1 within 1e-12.
  void check() const;

  static ExtWernerParams from_werner(double f);
};

DensityMatrix werner(double f);
DensityMatrix ext_werner(const ExtWernerParams& p);
DensityMatrix lambda_state(double lambda);

}  // namespace mre

#endif
