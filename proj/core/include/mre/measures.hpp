#ifndef MRE_MEASURES_HPP
#define MRE_MEASURES_HPP

#include <utility>
#include <vector>

#include "mre/states.hpp"

namespace mre {

/// Real expansion coefficients of rho = sum a[mu][nu] sigma_mu (x) sigma_nu.
struct PauliCoefficients {
  std::array<std::array<double, 4>, 4> a{};

  CMatrix reconstruct() const;
};

/// Bloch vectors of the two reduced states, xi_A = Tr(rho sigma (x) I).
std::pair<Eigen::Vector3d, Eigen::Vector3d> polarization_vectors(
    const DensityMatrix& rho);

PauliCoefficients pauli_coefficients(const DensityMatrix& rho);

/// Base-2 von Neumann entropy, 0*log 0 = 0; eigenvalues in [-1e-10, 0)
/// are clamped to 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// Quantum relative entropy S(rho||sigma) in bits, computed through the
/// eigen-expansion of sigma. Returns +infinity when rho has support on
/// sigma's kernel (overlap mass > 1e-10 on eigenvalues below 1e-12).
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);
double relative_entropy(const CMatrix& rho, const CMatrix& sigma);

/// One product term of a separable relative state.
struct ProductTerm {
  double weight;
  Eigen::Vector2cd ket_a;
  Eigen::Vector2cd ket_b;
};

/// The separable relative state of a pure state: the two-term polarization
/// mixture when |xi| > 1e-8, otherwise the Schmidt-pinch construction.
std::vector<ProductTerm> relative_state_terms(const PureState& psi);
DensityMatrix relative_state_pure(const PureState& psi);

/// Entanglement of a pure state: entropy of its reduced matrix.
double ef_pure(const PureState& psi);

struct WoottersResult {
  double concurrence;  // in [0,1]
  double ef;           // bits
};

/// Spin-flip closed form for the entanglement of formation of a 4x4 state.
WoottersResult ef_wootters(const DensityMatrix& rho);

/// Peres criterion: minimum eigenvalue of the partial transpose >= -1e-10.
bool ppt_separable(const DensityMatrix& rho);

/// Binary entropy in bits.
double binary_entropy(double x);

}  // namespace mre

#endif
