#ifndef MRE_QMAT_HPP
#define MRE_QMAT_HPP

#include <complex>

#include <Eigen/Dense>

namespace mre {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Pauli matrices sigma_0 (identity) .. sigma_3, 2x2.
const CMatrix& pauli(int mu);

/// Tensor product of two 2x2 matrices, basis order |00>,|01>,|10>,|11>
/// (first factor = subsystem A).
CMatrix kron(const CMatrix& a, const CMatrix& b);

struct EigenSystem {
  Eigen::VectorXd values;  // descending
  CMatrix vectors;         // orthonormal columns, aligned with values
};

bool is_hermitian(const CMatrix& m, double tol = 1e-10);

/// Eigendecomposition of a Hermitian 2x2 or 4x4 matrix with deterministic
/// output: within each degenerate cluster (gap < 1e-9) the basis is rebuilt
/// by Gram-Schmidt on projected canonical vectors, and every eigenvector is
/// rephased so its first component of modulus > 1e-9 is real and positive.
EigenSystem hermitian_eigensystem(const CMatrix& m);

enum class Subsystem { A, B };

/// Trace out the complementary qubit of a 4x4 operator; `keep` names the
/// surviving subsystem.
CMatrix partial_trace(const CMatrix& rho, Subsystem keep);

/// Transpose on the second qubit's indices. Involutive.
CMatrix partial_transpose(const CMatrix& rho);

}  // namespace mre

#endif
