#ifndef MRE_TESTS_SUPPORT_HPP
#define MRE_TESTS_SUPPORT_HPP

#include <random>

#include "mre/states.hpp"

namespace mre::test {

inline std::mt19937_64 rng_stream(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

inline PureState random_pure(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Eigen::Vector4cd v;
  for (int i = 0; i < 4; ++i) v(i) = Complex(n(rng), n(rng));
  v.normalize();
  return PureState{v};
}

inline PureState random_product(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Eigen::Vector2cd a, b;
  for (int i = 0; i < 2; ++i) {
    a(i) = Complex(n(rng), n(rng));
    b(i) = Complex(n(rng), n(rng));
  }
  a.normalize();
  b.normalize();
  Eigen::Vector4cd v;
  v << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
  return PureState{v};
}

/// Full-rank random mixed state (Ginibre construction).
inline DensityMatrix random_mixed(std::mt19937_64& rng, int dim = 4) {
  std::normal_distribution<double> n;
  CMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(n(rng), n(rng));
  CMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix::trusted(m);
}

inline CMatrix random_hermitian(std::mt19937_64& rng, int dim = 4) {
  std::normal_distribution<double> n;
  CMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(n(rng), n(rng));
  return 0.5 * (g + g.adjoint());
}

inline ExtWernerParams random_ext_werner(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(1e-12, 1.0);
  ExtWernerParams p;
  double total = 0.0;
  for (int i = 0; i < 4; ++i) {
    p.b[i] = -std::log(u(rng));
    p.c[i] = -std::log(u(rng));
    total += p.b[i] + p.c[i];
  }
  for (int i = 0; i < 4; ++i) {
    p.b[i] /= total;
    p.c[i] /= total;
  }
  return p;
}

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace mre::test

#endif
