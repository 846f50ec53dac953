#include "mre/states.hpp"

#include <cmath>

namespace mre {

DensityMatrix DensityMatrix::validate(const CMatrix& m, double tol) {
  const Eigen::Index n = m.rows();
  if ((n != 2 && n != 4) || m.cols() != n)
    throw validation_error(validation_error::Kind::dimension,
                           "density matrix must be 2x2 or 4x4");
  if (!is_hermitian(m, tol))
    throw validation_error(validation_error::Kind::non_hermitian,
                           "density matrix is not Hermitian");
  double tr = m.trace().real();
  if (std::abs(tr - 1.0) > tol)
    throw validation_error(validation_error::Kind::trace,
                           "density matrix trace differs from 1 by " +
                               std::to_string(tr - 1.0));
  EigenSystem sys = hermitian_eigensystem(m);
  double lo = sys.values.minCoeff();
  if (lo < -tol)
    throw validation_error(validation_error::Kind::negative_eigenvalue,
                           "density matrix has eigenvalue " + std::to_string(lo));
  return DensityMatrix(m);
}

PureState PureState::normalized(const Eigen::Vector4cd& v, double tol) {
  double n2 = v.squaredNorm();
  if (std::abs(n2 - 1.0) > tol)
    throw validation_error(validation_error::Kind::not_normalized,
                           "pure state norm^2 differs from 1 by " +
                               std::to_string(n2 - 1.0));
  return PureState{v};
}

PureState bell(Bell kind) {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  switch (kind) {
    case Bell::PhiPlus:  v(0) = s; v(3) = s; break;
    case Bell::PhiMinus: v(0) = s; v(3) = -s; break;
    case Bell::PsiPlus:  v(1) = s; v(2) = s; break;
    case Bell::PsiMinus: v(1) = s; v(2) = -s; break;
  }
  return PureState{v};
}

PureState basis_state(int i) {
  if (i < 0 || i > 3) throw std::invalid_argument("basis_state: index must be 0..3");
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  v(i) = 1.0;
  return PureState{v};
}

void ExtWernerParams::check() const {
  double total = 0.0;
  for (double w : b) {
    if (w < 0.0) throw std::invalid_argument("ext_werner: negative Bell weight");
    total += w;
  }
  for (double w : c) {
    if (w < 0.0) throw std::invalid_argument("ext_werner: negative basis weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("ext_werner: weights must sum to 1, got " +
                                std::to_string(total));
}

ExtWernerParams ExtWernerParams::from_werner(double f) {
  ExtWernerParams p;
  p.b = {(1.0 - f) / 3.0, (1.0 - f) / 3.0, (1.0 - f) / 3.0, f};
  return p;
}

DensityMatrix werner(double f) {
  if (f < 0.0 || f > 1.0) throw std::invalid_argument("werner: F must lie in [0,1]");
  CMatrix m = f * bell(Bell::PsiMinus).projector() +
              (1.0 - f) / 3.0 *
                  (bell(Bell::PsiPlus).projector() + bell(Bell::PhiPlus).projector() +
                   bell(Bell::PhiMinus).projector());
  return DensityMatrix::trusted(std::move(m));
}

DensityMatrix ext_werner(const ExtWernerParams& p) {
  p.check();
  static const Bell kinds[4] = {Bell::PhiPlus, Bell::PhiMinus, Bell::PsiPlus,
                                Bell::PsiMinus};
  CMatrix m = CMatrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) m += p.b[i] * bell(kinds[i]).projector();
  for (int i = 0; i < 4; ++i) m(i, i) += p.c[i];
  return DensityMatrix::trusted(std::move(m));
}

DensityMatrix lambda_state(double lambda) {
  if (lambda < 0.0 || lambda > 1.0)
    throw std::invalid_argument("lambda_state: lambda must lie in [0,1]");
  CMatrix m = lambda * bell(Bell::PhiPlus).projector() +
              (1.0 - lambda) * basis_state(0).projector();
  return DensityMatrix::trusted(std::move(m));
}

}  // namespace mre
