#include "mre/qmat.hpp"

#include <stdexcept>

namespace mre {

namespace {

CMatrix make_pauli(int mu) {
  CMatrix s(2, 2);
  const Complex i(0.0, 1.0);
  switch (mu) {
    case 0: s << 1, 0, 0, 1; break;
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -i, i, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli: index must be 0..3");
  }
  return s;
}

}  // namespace

const CMatrix& pauli(int mu) {
  static const CMatrix sigma[4] = {make_pauli(0), make_pauli(1), make_pauli(2),
                                   make_pauli(3)};
  if (mu < 0 || mu > 3) throw std::invalid_argument("pauli: index must be 0..3");
  return sigma[mu];
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2)
    throw std::invalid_argument("kron: both factors must be 2x2");
  CMatrix out(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block(2 * i, 2 * j, 2, 2) = a(i, j) * b;
  return out;
}

bool is_hermitian(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

namespace {

// First component with modulus above threshold becomes real positive.
void fix_phase(Eigen::Ref<CVector> v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    double mag = std::abs(v(i));
    if (mag > 1e-9) {
      v *= std::conj(v(i)) / mag;
      break;
    }
  }
}

int first_significant(const CVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(v(i)) > 1e-9) return static_cast<int>(i);
  return static_cast<int>(v.size());
}

}  // namespace

EigenSystem hermitian_eigensystem(const CMatrix& m) {
  const Eigen::Index n = m.rows();
  if ((n != 2 && n != 4) || m.cols() != n)
    throw std::invalid_argument("hermitian_eigensystem: matrix must be 2x2 or 4x4");
  if (!is_hermitian(m))
    throw std::invalid_argument("hermitian_eigensystem: input is not Hermitian");

  Eigen::SelfAdjointEigenSolver<CMatrix> solver((m + m.adjoint()) / 2.0);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigensystem: eigensolver failed");

  EigenSystem sys;
  sys.values = solver.eigenvalues().reverse();
  sys.vectors = solver.eigenvectors().rowwise().reverse();

  // Rebuild degenerate clusters deterministically.
  Eigen::Index lo = 0;
  while (lo < n) {
    Eigen::Index hi = lo + 1;
    while (hi < n && sys.values(hi - 1) - sys.values(hi) < 1e-9) ++hi;
    const Eigen::Index k = hi - lo;
    if (k > 1) {
      CMatrix proj = sys.vectors.middleCols(lo, k) *
                     sys.vectors.middleCols(lo, k).adjoint();
      CMatrix basis(n, k);
      Eigen::Index got = 0;
      for (double thresh : {1e-6, 1e-12}) {
        for (Eigen::Index j = 0; j < n && got < k; ++j) {
          CVector w = proj.col(j);
          for (Eigen::Index q = 0; q < got; ++q)
            w -= basis.col(q).dot(w) * basis.col(q);
          double nw = w.norm();
          if (nw > thresh) basis.col(got++) = w / nw;
        }
        if (got == k) break;
      }
      if (got != k)
        throw std::runtime_error("hermitian_eigensystem: cluster basis rebuild failed");
      sys.vectors.middleCols(lo, k) = basis;
      // Order by index of first significant component.
      std::vector<Eigen::Index> order(k);
      for (Eigen::Index q = 0; q < k; ++q) order[q] = q;
      std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
        return first_significant(basis.col(x)) < first_significant(basis.col(y));
      });
      for (Eigen::Index q = 0; q < k; ++q)
        sys.vectors.col(lo + q) = basis.col(order[q]);
    }
    lo = hi;
  }

  for (Eigen::Index j = 0; j < n; ++j) fix_phase(sys.vectors.col(j));
  return sys;
}

CMatrix partial_trace(const CMatrix& rho, Subsystem keep) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw std::invalid_argument("partial_trace: input must be 4x4");
  CMatrix out = CMatrix::Zero(2, 2);
  if (keep == Subsystem::A) {
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k)
        for (int j = 0; j < 2; ++j)
          out(i, k) += rho(2 * i + j, 2 * k + j);
  } else {
    for (int j = 0; j < 2; ++j)
      for (int l = 0; l < 2; ++l)
        for (int i = 0; i < 2; ++i)
          out(j, l) += rho(2 * i + j, 2 * i + l);
  }
  return out;
}

CMatrix partial_transpose(const CMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw std::invalid_argument("partial_transpose: input must be 4x4");
  CMatrix out(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          out(2 * i + l, 2 * k + j) = rho(2 * i + j, 2 * k + l);
  return out;
}

}  // namespace mre
