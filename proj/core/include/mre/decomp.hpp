#ifndef MRE_DECOMP_HPP
#define MRE_DECOMP_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mre/measures.hpp"
#include "mre/states.hpp"

namespace mre {

/// Weighted pure-state ensemble resynthesizing a mixed state.
struct Decomposition {
  struct Term {
    double p;
    PureState psi;
  };
  std::vector<Term> terms;

  CMatrix resynthesize() const;
  double total_weight() const;
};

struct OptimizerConfig {
  int restarts = 32;
  int max_iterations = 2000;
  int ensemble_size = 0;  // 0 = min(2*rank, 8)
  double tolerance = 1e-8;
  std::uint64_t seed = 0;
};

/// Result of an ensemble search. The best value is an upper bound on the
/// minimized quantity; no global optimality is claimed.
struct OptResult {
  double best_value = 0.0;
  Decomposition best;
  double seed_value = 0.0;
  long evaluations = 0;
  bool converged = false;
};

/// Ensemble of eigenpairs with eigenvalue > 1e-12.
Decomposition eigendecomposition_ensemble(const DensityMatrix& rho);

/// Ensemble generated by an m x r isometry acting on the weighted
/// eigenvectors (r = rank). Terms with weight < 1e-12 are dropped.
Decomposition ensemble_from_isometry(const DensityMatrix& rho, const CMatrix& v);

struct MreValue {
  double value;
  DensityMatrix relative_state;  // R_M = sum p_i R(psi_i)
};

/// S(rho || sum p_i R(psi_i)) for one ensemble of rho.
MreValue mre_of_decomposition(const DensityMatrix& rho, const Decomposition& d);

/// sum p_i S(Tr_A psi_i) for one ensemble of rho.
double ef_of_decomposition(const DensityMatrix& rho, const Decomposition& d);

/// Definitional ensembles of the named state families.
Decomposition werner_ensemble(double f);
Decomposition werner_identity_ensemble(double f);  // Psi- plus I expanded, F >= 1/4
Decomposition werner_low_f_ensemble(double f);     // F <= 1/4 variant
Decomposition ext_werner_ensemble(const ExtWernerParams& p);
Decomposition lambda_definitional_ensemble(double lambda);

/// Recovers extended-Werner weights when rho has that block structure.
std::optional<ExtWernerParams> detect_ext_werner(const DensityMatrix& rho);

/// Spin-flip-based ensemble whose members all share the state's concurrence.
/// For concurrence 0 the members are product states.
Decomposition wootters_ensemble(const DensityMatrix& rho);

/// Called with each evaluated ensemble, its objective value and its average
/// pure-state entanglement.
using EvalObserver =
    std::function<void(const Decomposition&, double value, double avg_ef)>;

OptResult optimize_mre(const DensityMatrix& rho, const OptimizerConfig& cfg,
                       const std::vector<Decomposition>& extra_seeds = {},
                       const EvalObserver& observer = nullptr);

OptResult optimize_ef(const DensityMatrix& rho, const OptimizerConfig& cfg,
                      const std::vector<Decomposition>& extra_seeds = {});

/// Direct search over separable mixtures of at most 8 product pure states;
/// upper bound on the relative entropy of entanglement.
double re_upper_bound(const DensityMatrix& rho, const OptimizerConfig& cfg);

}  // namespace mre

#endif
