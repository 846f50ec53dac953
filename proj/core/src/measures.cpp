#include "mre/measures.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mre {

namespace {

constexpr double kLog2e = 1.4426950408889634;  // 1/ln 2

double xlogx(double x) { return x > 0.0 ? x * std::log(x) * kLog2e : 0.0; }

double clamp_eigenvalue(double x) { return (x < 0.0 && x >= -1e-10) ? 0.0 : x; }

Eigen::Vector2cd bloch_ket(const Eigen::Vector3d& n) {
  // Unit Bloch vector -> eigenket of n.sigma with eigenvalue +1.
  Eigen::Vector2cd k;
  if (n.z() < -1.0 + 1e-14) {
    k << 0.0, 1.0;
    return k;
  }
  k << Complex(1.0 + n.z(), 0.0), Complex(n.x(), n.y());
  k /= k.norm();
  return k;
}

}  // namespace

CMatrix PauliCoefficients::reconstruct() const {
  CMatrix m = CMatrix::Zero(4, 4);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      m += a[mu][nu] * kron(pauli(mu), pauli(nu));
  return m;
}

std::pair<Eigen::Vector3d, Eigen::Vector3d> polarization_vectors(
    const DensityMatrix& rho) {
  if (rho.dim() != 4)
    throw std::invalid_argument("polarization_vectors: state must be 4x4");
  Eigen::Vector3d xa, xb;
  for (int i = 1; i <= 3; ++i) {
    xa(i - 1) = (rho.matrix() * kron(pauli(i), pauli(0))).trace().real();
    xb(i - 1) = (rho.matrix() * kron(pauli(0), pauli(i))).trace().real();
  }
  return {xa, xb};
}

PauliCoefficients pauli_coefficients(const DensityMatrix& rho) {
  if (rho.dim() != 4)
    throw std::invalid_argument("pauli_coefficients: state must be 4x4");
  PauliCoefficients out;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      out.a[mu][nu] =
          0.25 * (rho.matrix() * kron(pauli(mu), pauli(nu))).trace().real();
  return out;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  EigenSystem sys = hermitian_eigensystem(rho.matrix());
  double s = 0.0;
  for (Eigen::Index i = 0; i < sys.values.size(); ++i)
    s -= xlogx(clamp_eigenvalue(sys.values(i)));
  return s < 0.0 ? 0.0 : s;
}

double relative_entropy(const CMatrix& rho, const CMatrix& sigma) {
  if (rho.rows() != sigma.rows())
    throw std::invalid_argument("relative_entropy: dimension mismatch");
  EigenSystem sig = hermitian_eigensystem(sigma);
  EigenSystem rs = hermitian_eigensystem(rho);

  double s_rho = 0.0;
  for (Eigen::Index i = 0; i < rs.values.size(); ++i)
    s_rho -= xlogx(clamp_eigenvalue(rs.values(i)));

  double cross = 0.0;
  double kernel_mass = 0.0;
  for (Eigen::Index a = 0; a < sig.values.size(); ++a) {
    double lam = sig.values(a);
    double overlap =
        (sig.vectors.col(a).adjoint() * rho * sig.vectors.col(a))(0).real();
    if (lam < 1e-12) {
      kernel_mass += overlap;
    } else {
      cross -= std::log(lam) * kLog2e * overlap;
    }
  }
  if (kernel_mass > 1e-10) return std::numeric_limits<double>::infinity();

  double value = -s_rho + cross;
  if (value < 0.0 && value > -1e-9) value = 0.0;
  return value;
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return relative_entropy(rho.matrix(), sigma.matrix());
}

std::vector<ProductTerm> relative_state_terms(const PureState& psi) {
  CMatrix proj = psi.projector();
  DensityMatrix rho = DensityMatrix::trusted(proj);
  auto [xa, xb] = polarization_vectors(rho);
  double xi = xa.norm();

  std::vector<ProductTerm> terms;
  if (xi > 1e-8) {
    Eigen::Vector3d na = xa / xi, nb = xb / xb.norm();
    terms.push_back({(1.0 + xi) / 2.0, bloch_ket(na), bloch_ket(nb)});
    if ((1.0 - xi) / 2.0 > 1e-12)
      terms.push_back({(1.0 - xi) / 2.0, bloch_ket(-na), bloch_ket(-nb)});
  } else {
    // Schmidt pinch: SVD of the 2x2 amplitude array with deterministic phases.
    CMatrix m(2, 2);
    m << psi.a(), psi.b(), psi.c(), psi.d();
    EigenSystem left = hermitian_eigensystem(m * m.adjoint());
    for (int i = 0; i < 2; ++i) {
      double s2 = clamp_eigenvalue(left.values(i));
      if (s2 < 1e-12) continue;
      Eigen::Vector2cd u = left.vectors.col(i);
      Eigen::Vector2cd v = (m.adjoint() * u) / std::sqrt(s2);
      terms.push_back({s2, u, v.conjugate()});
    }
  }
  return terms;
}

DensityMatrix relative_state_pure(const PureState& psi) {
  CMatrix r = CMatrix::Zero(4, 4);
  for (const ProductTerm& t : relative_state_terms(psi)) {
    CMatrix pa = t.ket_a * t.ket_a.adjoint();
    CMatrix pb = t.ket_b * t.ket_b.adjoint();
    r += t.weight * kron(pa, pb);
  }
  return DensityMatrix::trusted(std::move(r));
}

double ef_pure(const PureState& psi) {
  CMatrix red = partial_trace(psi.projector(), Subsystem::B);
  return von_neumann_entropy(DensityMatrix::trusted(std::move(red)));
}

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -xlogx(x) - xlogx(1.0 - x);
}

WoottersResult ef_wootters(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw std::invalid_argument("ef_wootters: state must be 4x4");
  CMatrix yy = kron(pauli(2), pauli(2));
  CMatrix flipped = yy * rho.matrix().conjugate() * yy;

  EigenSystem sys = hermitian_eigensystem(rho.matrix());
  CMatrix sqrt_rho = CMatrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) {
    double lam = clamp_eigenvalue(sys.values(i));
    if (lam > 0.0)
      sqrt_rho += std::sqrt(lam) * sys.vectors.col(i) * sys.vectors.col(i).adjoint();
  }
  EigenSystem inner = hermitian_eigensystem(sqrt_rho * flipped * sqrt_rho);

  std::array<double, 4> lam{};
  for (int i = 0; i < 4; ++i)
    lam[i] = std::sqrt(std::max(0.0, inner.values(i)));
  double c = lam[0] - lam[1] - lam[2] - lam[3];
  if (c < 0.0) c = 0.0;
  if (c > 1.0) c = 1.0;
  double ef = binary_entropy((1.0 + std::sqrt(1.0 - c * c)) / 2.0);
  return {c, ef};
}

bool ppt_separable(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw std::invalid_argument("ppt_separable: state must be 4x4");
  EigenSystem sys = hermitian_eigensystem(partial_transpose(rho.matrix()));
  return sys.values.minCoeff() >= -1e-10;
}

}  // namespace mre
