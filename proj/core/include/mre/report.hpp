#ifndef MRE_REPORT_HPP
#define MRE_REPORT_HPP

#include <optional>
#include <string>

#include "mre/closedform.hpp"
#include "mre/decomp.hpp"

namespace mre {

struct MeasureReport {
  double entropy = 0.0;
  double concurrence = 0.0;
  double ef_wootters = 0.0;
  double mre_seed = 0.0;
  double mre_optimized = 0.0;
  std::optional<double> re_upper;
  bool ppt_separable = false;
  Decomposition ensemble_used;
};

struct MeasureOptions {
  OptimizerConfig optimizer;
  bool optimize = true;
  bool compute_re_upper = false;
};

MeasureReport measure_state(const DensityMatrix& rho, const MeasureOptions& opts);

/// Rounds to 12 significant digits; the rendering contract for all outputs.
double round_sig(double x);

/// JSON renderings; +infinity is serialized as the string "inf".
std::string report_to_json(const MeasureReport& report);
std::string opt_result_to_json(const OptResult& result);

struct ExtWernerReport {
  std::array<double, 4> eigenvalues;
  double mre_closed;
  bool separable;
  double mre_pipeline;
  MeasureReport measure;
};

ExtWernerReport ext_werner_report(const ExtWernerParams& p,
                                  const MeasureOptions& opts);
std::string ext_werner_report_to_json(const ExtWernerReport& report);

/// One CSV row of the Werner sweep: F, mre_closed, mre_pipeline,
/// ef_wootters, ppt.
std::string werner_sweep_csv(double from, double to, double step);

}  // namespace mre

#endif
