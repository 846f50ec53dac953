#include "mre/decomp.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "mre/nelder_mead.hpp"

namespace mre {

namespace {

constexpr double kPi = std::numbers::pi;

struct RankBasis {
  Eigen::VectorXd lambda;  // nonzero eigenvalues, descending
  CMatrix vectors;         // 4 x r
};

RankBasis rank_basis(const DensityMatrix& rho) {
  EigenSystem sys = hermitian_eigensystem(rho.matrix());
  int r = 0;
  while (r < sys.values.size() && sys.values(r) > 1e-12) ++r;
  RankBasis basis;
  basis.lambda = sys.values.head(r);
  basis.vectors = sys.vectors.leftCols(r);
  return basis;
}

Decomposition ensemble_from_basis(const RankBasis& basis, const CMatrix& v) {
  const int r = static_cast<int>(basis.lambda.size());
  const int m = static_cast<int>(v.rows());
  if (v.cols() != r)
    throw std::invalid_argument("ensemble_from_isometry: rank mismatch");
  if ((v.adjoint() * v - CMatrix::Identity(r, r)).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("ensemble_from_isometry: V is not an isometry");

  Decomposition d;
  for (int i = 0; i < m; ++i) {
    Eigen::Vector4cd tilde = Eigen::Vector4cd::Zero();
    for (int j = 0; j < r; ++j)
      tilde += v(i, j) * std::sqrt(basis.lambda(j)) * basis.vectors.col(j);
    double p = tilde.squaredNorm();
    if (p < 1e-12) continue;
    d.terms.push_back({p, PureState{tilde / std::sqrt(p)}});
  }
  return d;
}

std::mt19937_64 rng_stream(std::uint64_t seed, std::uint64_t counter) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(counter), static_cast<std::uint32_t>(counter >> 32)};
  return std::mt19937_64(seq);
}

// m^2 real parameters <-> Hermitian m x m generator; isometry = first r
// columns of exp(iH).
Eigen::Index param_count(int m) { return static_cast<Eigen::Index>(m) * m; }

CMatrix hermitian_from_params(const Eigen::VectorXd& x, int m) {
  CMatrix h = CMatrix::Zero(m, m);
  Eigen::Index idx = 0;
  for (int k = 0; k < m; ++k) h(k, k) = x(idx++);
  for (int k = 0; k < m; ++k)
    for (int l = k + 1; l < m; ++l) {
      Complex v(x(idx), x(idx + 1));
      idx += 2;
      h(k, l) = v;
      h(l, k) = std::conj(v);
    }
  return h;
}

Eigen::VectorXd params_from_hermitian(const CMatrix& h) {
  const int m = static_cast<int>(h.rows());
  Eigen::VectorXd x(param_count(m));
  Eigen::Index idx = 0;
  for (int k = 0; k < m; ++k) x(idx++) = h(k, k).real();
  for (int k = 0; k < m; ++k)
    for (int l = k + 1; l < m; ++l) {
      x(idx++) = h(k, l).real();
      x(idx++) = h(k, l).imag();
    }
  return x;
}

CMatrix unitary_exp(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  const Eigen::VectorXd& w = solver.eigenvalues();
  CVector phases(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i)
    phases(i) = std::polar(1.0, w(i));
  return solver.eigenvectors() * phases.asDiagonal() *
         solver.eigenvectors().adjoint();
}

CMatrix complete_to_unitary(const CMatrix& v) {
  const int m = static_cast<int>(v.rows());
  const int r = static_cast<int>(v.cols());
  CMatrix u(m, m);
  u.leftCols(r) = v;
  int got = r;
  for (double thresh : {0.3, 1e-8}) {
    for (int j = 0; j < m && got < m; ++j) {
      CVector w = CVector::Zero(m);
      w(j) = 1.0;
      for (int q = 0; q < got; ++q) w -= u.col(q).dot(w) * u.col(q);
      double nw = w.norm();
      if (nw > thresh) u.col(got++) = w / nw;
    }
    if (got == m) break;
  }
  if (got != m)
    throw std::runtime_error("complete_to_unitary: completion failed");
  return u;
}

// Hermitian log: U = exp(iH).
CMatrix hermitian_log(const CMatrix& u) {
  Eigen::ComplexEigenSolver<CMatrix> solver(u);
  CVector d = solver.eigenvalues();
  CVector logs(d.size());
  for (Eigen::Index i = 0; i < d.size(); ++i)
    logs(i) = Complex(std::arg(d(i)), 0.0);
  CMatrix h = solver.eigenvectors() * logs.asDiagonal() *
              solver.eigenvectors().inverse();
  return (h + h.adjoint()) / 2.0;
}

// Isometry reproducing a given ensemble (up to numerical projection).
CMatrix isometry_from_ensemble(const RankBasis& basis, const Decomposition& d) {
  const int r = static_cast<int>(basis.lambda.size());
  const int m = static_cast<int>(d.terms.size());
  CMatrix v(m, r);
  for (int i = 0; i < m; ++i) {
    Eigen::Vector4cd tilde = std::sqrt(d.terms[i].p) * d.terms[i].psi.amp;
    for (int j = 0; j < r; ++j)
      v(i, j) = basis.vectors.col(j).dot(tilde) / std::sqrt(basis.lambda(j));
  }
  // Nearest isometry.
  Eigen::JacobiSVD<CMatrix> svd(v, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace

CMatrix Decomposition::resynthesize() const {
  CMatrix m = CMatrix::Zero(4, 4);
  for (const Term& t : terms) m += t.p * t.psi.projector();
  return m;
}

double Decomposition::total_weight() const {
  double s = 0.0;
  for (const Term& t : terms) s += t.p;
  return s;
}

Decomposition eigendecomposition_ensemble(const DensityMatrix& rho) {
  RankBasis basis = rank_basis(rho);
  Decomposition d;
  for (Eigen::Index j = 0; j < basis.lambda.size(); ++j)
    d.terms.push_back({basis.lambda(j), PureState{basis.vectors.col(j)}});
  return d;
}

Decomposition ensemble_from_isometry(const DensityMatrix& rho, const CMatrix& v) {
  return ensemble_from_basis(rank_basis(rho), v);
}

namespace {

void check_decomposes(const DensityMatrix& rho, const Decomposition& d) {
  if (std::abs(d.total_weight() - 1.0) > 1e-10)
    throw std::invalid_argument("decomposition weights do not sum to 1");
  if ((d.resynthesize() - rho.matrix()).cwiseAbs().maxCoeff() > 1e-9)
    throw std::invalid_argument("decomposition does not resynthesize the state");
}

}  // namespace

MreValue mre_of_decomposition(const DensityMatrix& rho, const Decomposition& d) {
  check_decomposes(rho, d);
  CMatrix r_m = CMatrix::Zero(4, 4);
  for (const Decomposition::Term& t : d.terms)
    r_m += t.p * relative_state_pure(t.psi).matrix();
  double value = relative_entropy(rho.matrix(), r_m);
  return {value, DensityMatrix::trusted(std::move(r_m))};
}

double ef_of_decomposition(const DensityMatrix& rho, const Decomposition& d) {
  check_decomposes(rho, d);
  double s = 0.0;
  for (const Decomposition::Term& t : d.terms) s += t.p * ef_pure(t.psi);
  return s;
}

Decomposition werner_ensemble(double f) {
  if (f < 0.0 || f > 1.0) throw std::invalid_argument("werner_ensemble: F out of range");
  Decomposition d;
  auto add = [&](double p, Bell kind) {
    if (p > 1e-12) d.terms.push_back({p, bell(kind)});
  };
  add(f, Bell::PsiMinus);
  add((1.0 - f) / 3.0, Bell::PsiPlus);
  add((1.0 - f) / 3.0, Bell::PhiPlus);
  add((1.0 - f) / 3.0, Bell::PhiMinus);
  return d;
}

Decomposition werner_identity_ensemble(double f) {
  if (f < 0.25 || f > 1.0)
    throw std::invalid_argument("werner_identity_ensemble: needs F in [1/4,1]");
  Decomposition d;
  if ((4.0 * f - 1.0) / 3.0 > 1e-12)
    d.terms.push_back({(4.0 * f - 1.0) / 3.0, bell(Bell::PsiMinus)});
  for (int i = 0; i < 4; ++i)
    if ((1.0 - f) / 3.0 > 1e-12) d.terms.push_back({(1.0 - f) / 3.0, basis_state(i)});
  return d;
}

Decomposition werner_low_f_ensemble(double f) {
  if (f < 0.0 || f > 0.25)
    throw std::invalid_argument("werner_low_f_ensemble: needs F in [0,1/4]");
  Decomposition d;
  if ((1.0 - 4.0 * f) / 3.0 > 1e-12)
    d.terms.push_back({(1.0 - 4.0 * f) / 3.0, bell(Bell::PsiPlus)});
  if ((1.0 - f) / 3.0 > 1e-12) {
    d.terms.push_back({(1.0 - f) / 3.0, basis_state(0)});
    d.terms.push_back({(1.0 - f) / 3.0, basis_state(3)});
  }
  if (f > 1e-12) {
    d.terms.push_back({f, basis_state(1)});
    d.terms.push_back({f, basis_state(2)});
  }
  return d;
}

Decomposition ext_werner_ensemble(const ExtWernerParams& p) {
  p.check();
  static const Bell kinds[4] = {Bell::PhiPlus, Bell::PhiMinus, Bell::PsiPlus,
                                Bell::PsiMinus};
  Decomposition d;
  for (int i = 0; i < 4; ++i)
    if (p.b[i] > 1e-12) d.terms.push_back({p.b[i], bell(kinds[i])});
  for (int i = 0; i < 4; ++i)
    if (p.c[i] > 1e-12) d.terms.push_back({p.c[i], basis_state(i)});
  return d;
}

Decomposition lambda_definitional_ensemble(double lambda) {
  Decomposition d;
  if (lambda > 1e-12) d.terms.push_back({lambda, bell(Bell::PhiPlus)});
  if (1.0 - lambda > 1e-12) d.terms.push_back({1.0 - lambda, basis_state(0)});
  return d;
}

std::optional<ExtWernerParams> detect_ext_werner(const DensityMatrix& rho) {
  if (rho.dim() != 4) return std::nullopt;
  const CMatrix& m = rho.matrix();
  auto zero = [](Complex v) { return std::abs(v) <= 1e-12; };
  // Only the {00,11} and {01,10} blocks may be populated, with real couplings.
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      bool allowed = (i == j) || (i == 0 && j == 3) || (i == 3 && j == 0) ||
                     (i == 1 && j == 2) || (i == 2 && j == 1);
      if (!allowed && !zero(m(i, j))) return std::nullopt;
    }
  if (std::abs(m(0, 3).imag()) > 1e-12 || std::abs(m(1, 2).imag()) > 1e-12)
    return std::nullopt;

  double x1 = m(0, 3).real(), x2 = m(1, 2).real();
  double s1 = std::min(m(0, 0).real(), m(3, 3).real());
  double s2 = std::min(m(1, 1).real(), m(2, 2).real());
  if (s1 < std::abs(x1) - 1e-12 || s2 < std::abs(x2) - 1e-12) return std::nullopt;
  s1 = std::max(s1, std::abs(x1));
  s2 = std::max(s2, std::abs(x2));

  ExtWernerParams p;
  p.b = {s1 + x1, s1 - x1, s2 + x2, s2 - x2};
  p.c = {m(0, 0).real() - s1, m(1, 1).real() - s2, m(2, 2).real() - s2,
         m(3, 3).real() - s1};
  double total = 0.0;
  for (double& w : p.b) { w = std::max(w, 0.0); total += w; }
  for (double& w : p.c) { w = std::max(w, 0.0); total += w; }
  for (double& w : p.b) w /= total;
  for (double& w : p.c) w /= total;
  return p;
}

namespace {

// Takagi factorization tau = Q diag(mu) Q^T for complex symmetric tau,
// via the real symmetric embedding [[Re, Im],[Im, -Re]].
void takagi(const CMatrix& tau, CMatrix& q, Eigen::VectorXd& mu) {
  const int r = static_cast<int>(tau.rows());
  Eigen::MatrixXd embed(2 * r, 2 * r);
  embed.topLeftCorner(r, r) = tau.real();
  embed.topRightCorner(r, r) = tau.imag();
  embed.bottomLeftCorner(r, r) = tau.imag();
  embed.bottomRightCorner(r, r) = -tau.real();
  embed = (embed + embed.transpose()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(embed);

  q.resize(r, r);
  mu.resize(r);
  int got = 0;
  for (double thresh : {0.5, 1e-3}) {
    for (int pass = 2 * r - 1; pass >= 0 && got < r; --pass) {
      double sigma = solver.eigenvalues()(pass);  // descending from the top
      if (sigma < -1e-9) continue;
      CVector cand(r);
      for (int i = 0; i < r; ++i)
        cand(i) = Complex(solver.eigenvectors()(i, pass),
                          solver.eigenvectors()(r + i, pass));
      for (int k = 0; k < got; ++k) cand -= q.col(k).dot(cand) * q.col(k);
      double nc = cand.norm();
      if (nc > thresh) {
        q.col(got) = cand / nc;
        mu(got) = std::max(sigma, 0.0);
        ++got;
      }
    }
    if (got == r) break;
  }
  if (got != r) throw std::runtime_error("takagi: vector selection failed");
}

// Phases phi with sum_j mu_j e^{i phi_j} = 0 (polygon closure); requires
// mu_0 <= mu_1 + mu_2 + mu_3, mu descending.
std::array<double, 4> closure_phases(const std::array<double, 4>& mu) {
  std::array<double, 4> phi{0.0, 0.0, 0.0, 0.0};
  double c = mu[0], a = mu[1], b = mu[2] + mu[3];
  if (c < 1e-15) return phi;
  if (a < 1e-15) {
    // Only the combined third side remains; it must cancel mu_0.
    phi[1] = phi[2] = phi[3] = kPi;
    return phi;
  }
  double cos_a = (a * a + c * c - b * b) / (2.0 * a * c);
  cos_a = std::clamp(cos_a, -1.0, 1.0);
  phi[1] = kPi - std::acos(cos_a);
  Complex rest = -Complex(c, 0.0) - a * std::polar(1.0, phi[1]);
  phi[2] = phi[3] = std::arg(rest);
  return phi;
}

// Unitary pair mixing driving every member's concurrence to the state's
// concurrence (Horn-type redistribution of the spin-flip diagonal).
void equalize_concurrence(std::array<Eigen::Vector4cd, 4>& z, double conc) {
  const CMatrix yy = kron(pauli(2), pauli(2));
  auto bilinear = [&](const Eigen::Vector4cd& u, const Eigen::Vector4cd& v) {
    return (u.transpose() * yy * v)(0);
  };

  for (int sweep = 0; sweep < 80; ++sweep) {
    double err = 0.0;
    for (const auto& zi : z) {
      double p = zi.squaredNorm();
      err += std::pow(std::abs(bilinear(zi, zi)) - conc * p, 2);
    }
    if (err < 1e-24) break;

    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        double pi = z[i].squaredNorm(), pj = z[j].squaredNorm();
        if (pi + pj < 1e-14) continue;
        Complex ti = bilinear(z[i], z[i]), tj = bilinear(z[j], z[j]);
        Complex tij = bilinear(z[i], z[j]);
        Complex g = z[i].dot(z[j]);

        auto pair_err = [&](double alpha, double beta) {
          double ca = std::cos(alpha), sa = std::sin(alpha);
          Complex ph = std::polar(1.0, beta);
          Complex ti2 = ca * ca * ti + sa * sa * ph * ph * tj +
                        2.0 * ca * sa * ph * tij;
          Complex tj2 = sa * sa * std::conj(ph) * std::conj(ph) * ti +
                        ca * ca * tj - 2.0 * ca * sa * std::conj(ph) * tij;
          double pi2 = ca * ca * pi + sa * sa * pj +
                       2.0 * ca * sa * (ph * g).real();
          double pj2 = sa * sa * pi + ca * ca * pj -
                       2.0 * ca * sa * (ph * g).real();
          return std::pow(std::abs(ti2) - conc * pi2, 2) +
                 std::pow(std::abs(tj2) - conc * pj2, 2);
        };

        double e0 = pair_err(0.0, 0.0);
        double best_e = e0, best_a = 0.0, best_b = 0.0;
        for (int ia = 0; ia < 48; ++ia)
          for (int ib = 0; ib < 48; ++ib) {
            double alpha = -kPi / 2.0 + kPi * ia / 48.0;
            double beta = 2.0 * kPi * ib / 48.0;
            double e = pair_err(alpha, beta);
            if (e < best_e) { best_e = e; best_a = alpha; best_b = beta; }
          }
        NelderMeadOptions nm;
        nm.max_iterations = 200;
        nm.tolerance = 1e-16;
        nm.initial_step = 0.05;
        Eigen::VectorXd x0(2);
        x0 << best_a, best_b;
        auto res = nelder_mead(
            [&](const Eigen::VectorXd& x) { return pair_err(x(0), x(1)); }, x0, nm);
        if (res.value < best_e) { best_e = res.value; best_a = res.x(0); best_b = res.x(1); }

        if (best_e < e0 - 1e-22) {
          double ca = std::cos(best_a), sa = std::sin(best_a);
          Complex ph = std::polar(1.0, best_b);
          Eigen::Vector4cd zi2 = ca * z[i] + sa * ph * z[j];
          Eigen::Vector4cd zj2 = -sa * std::conj(ph) * z[i] + ca * z[j];
          z[i] = zi2;
          z[j] = zj2;
        }
      }
  }
}

}  // namespace

Decomposition wootters_ensemble(const DensityMatrix& rho) {
  if (rho.dim() != 4)
    throw std::invalid_argument("wootters_ensemble: state must be 4x4");
  RankBasis basis = rank_basis(rho);
  const int r = static_cast<int>(basis.lambda.size());

  Decomposition d;
  if (r == 1) {
    d.terms.push_back({1.0, PureState{basis.vectors.col(0)}});
    return d;
  }

  CMatrix x(4, r);
  for (int j = 0; j < r; ++j)
    x.col(j) = std::sqrt(basis.lambda(j)) * basis.vectors.col(j);

  const CMatrix yy = kron(pauli(2), pauli(2));
  CMatrix tau(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      tau(i, j) = (x.col(i).transpose() * yy * x.col(j))(0);
  tau = (tau + tau.transpose()) / 2.0;

  CMatrix q;
  Eigen::VectorXd mu_r;
  takagi(tau, q, mu_r);

  std::array<Eigen::Vector4cd, 4> y;
  std::array<double, 4> mu{0.0, 0.0, 0.0, 0.0};
  for (int i = 0; i < 4; ++i) y[i].setZero();
  for (int i = 0; i < r; ++i) {
    y[i] = x * q.col(i).conjugate();
    mu[i] = mu_r(i);
  }

  double conc = mu[0] - mu[1] - mu[2] - mu[3];

  std::array<double, 4> theta{};
  if (conc <= 1e-12) {
    std::array<double, 4> phi = closure_phases(mu);
    for (int i = 0; i < 4; ++i) theta[i] = phi[i] / 2.0;
  } else {
    theta = {0.0, kPi / 2.0, kPi / 2.0, kPi / 2.0};
  }

  static const int had[4][4] = {
      {1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
  std::array<Eigen::Vector4cd, 4> z;
  for (int i = 0; i < 4; ++i) {
    z[i].setZero();
    for (int j = 0; j < 4; ++j)
      z[i] += 0.5 * static_cast<double>(had[i][j]) * std::polar(1.0, theta[j]) * y[j];
  }

  if (conc > 1e-12) equalize_concurrence(z, conc);

  for (const auto& zi : z) {
    double p = zi.squaredNorm();
    if (p < 1e-12) continue;
    d.terms.push_back({p, PureState{zi / std::sqrt(p)}});
  }
  return d;
}

namespace {

enum class Objective { mre, ef };

OptResult optimize_core(const DensityMatrix& rho, const OptimizerConfig& cfg,
                        Objective kind,
                        const std::vector<Decomposition>& extra_seeds,
                        const EvalObserver& observer) {
  if (cfg.restarts < 1 || cfg.max_iterations < 1 || cfg.tolerance <= 0.0)
    throw std::invalid_argument("optimize: invalid configuration");

  RankBasis basis = rank_basis(rho);
  const int r = static_cast<int>(basis.lambda.size());
  int m_default = cfg.ensemble_size > 0
                      ? std::clamp(cfg.ensemble_size, r, 8)
                      : std::min(2 * r, 8);

  long evaluations = 0;
  auto value_of = [&](const Decomposition& d) {
    ++evaluations;
    double value = kind == Objective::mre ? mre_of_decomposition(rho, d).value
                                          : ef_of_decomposition(rho, d);
    if (observer) observer(d, value, ef_of_decomposition(rho, d));
    return value;
  };

  // Seeds: eigen-ensemble first, then the definitional ensemble when the
  // state is a recognized family, then the spin-flip construction.
  std::vector<Decomposition> seeds;
  seeds.push_back(eigendecomposition_ensemble(rho));
  if (auto p = detect_ext_werner(rho)) seeds.push_back(ext_werner_ensemble(*p));
  const std::size_t canonical = seeds.size();
  seeds.push_back(wootters_ensemble(rho));
  for (const Decomposition& d : extra_seeds) seeds.push_back(d);

  OptResult out;
  out.best_value = std::numeric_limits<double>::infinity();
  out.seed_value = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    double v = value_of(seeds[i]);
    if (i < canonical) out.seed_value = std::min(out.seed_value, v);
    if (v < out.best_value) {
      out.best_value = v;
      out.best = seeds[i];
      out.converged = true;
    }
  }

  for (int k = 0; k < cfg.restarts; ++k) {
    int m = m_default;
    Eigen::VectorXd x0;
    if (k < static_cast<int>(seeds.size())) {
      CMatrix v0 = isometry_from_ensemble(basis, seeds[k]);
      m = std::max(m_default, static_cast<int>(v0.rows()));
      CMatrix v = CMatrix::Zero(m, r);
      v.topRows(v0.rows()) = v0;
      x0 = params_from_hermitian(hermitian_log(complete_to_unitary(v)));
    } else {
      auto rng = rng_stream(cfg.seed, static_cast<std::uint64_t>(k));
      std::normal_distribution<double> normal(0.0, 0.8);
      x0.resize(param_count(m));
      for (Eigen::Index i = 0; i < x0.size(); ++i) x0(i) = normal(rng);
    }

    auto f = [&](const Eigen::VectorXd& params) {
      CMatrix u = unitary_exp(hermitian_from_params(params, m));
      return value_of(ensemble_from_basis(basis, u.leftCols(r)));
    };

    NelderMeadOptions nm;
    nm.max_iterations = cfg.max_iterations;
    nm.tolerance = cfg.tolerance;
    auto res = nelder_mead(f, x0, nm);
    nm.initial_step = 0.03;  // refreshed simplex around the found point
    auto res2 = nelder_mead(f, res.x, nm);
    if (res2.value < res.value) res = res2;

    if (res.value < out.best_value) {
      out.best_value = res.value;
      CMatrix u = unitary_exp(hermitian_from_params(res.x, m));
      out.best = ensemble_from_basis(basis, u.leftCols(r));
      out.converged = res.converged;
    }
  }

  out.evaluations = evaluations;
  return out;
}

}  // namespace

OptResult optimize_mre(const DensityMatrix& rho, const OptimizerConfig& cfg,
                       const std::vector<Decomposition>& extra_seeds,
                       const EvalObserver& observer) {
  return optimize_core(rho, cfg, Objective::mre, extra_seeds, observer);
}

OptResult optimize_ef(const DensityMatrix& rho, const OptimizerConfig& cfg,
                      const std::vector<Decomposition>& extra_seeds) {
  return optimize_core(rho, cfg, Objective::ef, extra_seeds, nullptr);
}

namespace {

constexpr int kSeparableTerms = 8;

struct SeparableSeed {
  std::vector<ProductTerm> terms;
};

CMatrix separable_from_terms(const std::vector<ProductTerm>& terms) {
  CMatrix sigma = CMatrix::Zero(4, 4);
  for (const ProductTerm& t : terms)
    sigma += t.weight * kron(t.ket_a * t.ket_a.adjoint(), t.ket_b * t.ket_b.adjoint());
  return sigma;
}

Eigen::Vector2cd angles_to_ket(double th, double ph) {
  Eigen::Vector2cd k;
  k << Complex(std::cos(th / 2.0), 0.0), std::polar(std::sin(th / 2.0), ph);
  return k;
}

std::pair<double, double> ket_to_angles(const Eigen::Vector2cd& k) {
  double th = 2.0 * std::atan2(std::abs(k(1)), std::abs(k(0)));
  double ph = std::arg(k(1)) - std::arg(k(0));
  return {th, ph};
}

CMatrix separable_from_params(const Eigen::VectorXd& x) {
  std::array<double, kSeparableTerms> w;
  double wmax = x.head(kSeparableTerms).maxCoeff();
  double total = 0.0;
  for (int t = 0; t < kSeparableTerms; ++t) {
    w[t] = std::exp(x(t) - wmax);
    total += w[t];
  }
  std::vector<ProductTerm> terms;
  for (int t = 0; t < kSeparableTerms; ++t) {
    Eigen::Index base = kSeparableTerms + 4 * t;
    terms.push_back({w[t] / total, angles_to_ket(x(base), x(base + 1)),
                     angles_to_ket(x(base + 2), x(base + 3))});
  }
  return separable_from_terms(terms);
}

Eigen::VectorXd params_from_seed(const SeparableSeed& seed) {
  Eigen::VectorXd x(kSeparableTerms + 4 * kSeparableTerms);
  for (int t = 0; t < kSeparableTerms; ++t) {
    double w = t < static_cast<int>(seed.terms.size()) ? seed.terms[t].weight : 0.0;
    x(t) = std::log(std::max(w, 1e-12));
    Eigen::Vector2cd ka = t < static_cast<int>(seed.terms.size())
                              ? seed.terms[t].ket_a
                              : Eigen::Vector2cd(1.0, 0.0);
    Eigen::Vector2cd kb = t < static_cast<int>(seed.terms.size())
                              ? seed.terms[t].ket_b
                              : Eigen::Vector2cd(1.0, 0.0);
    auto [tha, pha] = ket_to_angles(ka);
    auto [thb, phb] = ket_to_angles(kb);
    Eigen::Index base = kSeparableTerms + 4 * t;
    x(base) = tha;
    x(base + 1) = pha;
    x(base + 2) = thb;
    x(base + 3) = phb;
  }
  return x;
}

}  // namespace

double re_upper_bound(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  std::vector<SeparableSeed> seeds;

  // Relative state of the eigen-ensemble: always feasible.
  {
    SeparableSeed s;
    for (const auto& term : eigendecomposition_ensemble(rho).terms)
      for (ProductTerm pt : relative_state_terms(term.psi)) {
        pt.weight *= term.p;
        if (pt.weight > 1e-14) s.terms.push_back(pt);
      }
    seeds.push_back(std::move(s));
  }
  // For PPT-separable states the spin-flip construction yields a product
  // ensemble, so the state itself is feasible.
  if (ppt_separable(rho)) {
    SeparableSeed s;
    for (const auto& term : wootters_ensemble(rho).terms)
      for (ProductTerm pt : relative_state_terms(term.psi)) {
        pt.weight *= term.p;
        if (pt.weight > 1e-14) s.terms.push_back(pt);
      }
    if (s.terms.size() <= kSeparableTerms) seeds.push_back(std::move(s));
  }

  double best = std::numeric_limits<double>::infinity();
  for (const SeparableSeed& s : seeds) {
    double v = relative_entropy(rho.matrix(), separable_from_terms(s.terms));
    best = std::min(best, v);
  }

  auto f = [&](const Eigen::VectorXd& x) {
    double v = relative_entropy(rho.matrix(), separable_from_params(x));
    return std::isfinite(v) ? v : 1e6;
  };

  int restarts = std::min(cfg.restarts, 8);
  for (int k = 0; k < restarts; ++k) {
    Eigen::VectorXd x0;
    if (k < static_cast<int>(seeds.size())) {
      x0 = params_from_seed(seeds[k]);
    } else {
      auto rng = rng_stream(cfg.seed ^ 0x5eabull, static_cast<std::uint64_t>(k));
      std::uniform_real_distribution<double> uni(0.0, kPi);
      x0.resize(kSeparableTerms * 5);
      for (Eigen::Index i = 0; i < x0.size(); ++i) x0(i) = uni(rng);
    }
    NelderMeadOptions nm;
    nm.max_iterations = cfg.max_iterations;
    nm.tolerance = cfg.tolerance;
    auto res = nelder_mead(f, x0, nm);
    best = std::min(best, res.value);
  }
  return std::max(best, 0.0);
}

}  // namespace mre
