#include "mre/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

namespace mre {

namespace {

using nlohmann::json;

std::string format_sig(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

json number(double x) {
  if (std::isinf(x)) return "inf";
  return round_sig(x);
}

json decomposition_json(const Decomposition& d) {
  json terms = json::array();
  for (const auto& t : d.terms) {
    json amp = json::array();
    for (int i = 0; i < 4; ++i)
      amp.push_back({number(t.psi.amp(i).real()), number(t.psi.amp(i).imag())});
    terms.push_back({{"p", number(t.p)}, {"state", amp}});
  }
  return terms;
}

}  // namespace

double round_sig(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format_sig(x).c_str(), nullptr);
}

MeasureReport measure_state(const DensityMatrix& rho, const MeasureOptions& opts) {
  MeasureReport report;
  report.entropy = von_neumann_entropy(rho);
  WoottersResult w = ef_wootters(rho);
  report.concurrence = w.concurrence;
  report.ef_wootters = w.ef;
  report.ppt_separable = ppt_separable(rho);

  if (opts.optimize) {
    OptResult res = optimize_mre(rho, opts.optimizer);
    report.mre_seed = res.seed_value;
    report.mre_optimized = res.best_value;
    report.ensemble_used = res.best;
  } else {
    Decomposition eigen = eigendecomposition_ensemble(rho);
    double seed = mre_of_decomposition(rho, eigen).value;
    if (auto p = detect_ext_werner(rho))
      seed = std::min(seed, mre_of_decomposition(rho, ext_werner_ensemble(*p)).value);
    report.mre_seed = seed;
    report.mre_optimized = seed;
    report.ensemble_used = eigen;
  }
  if (opts.compute_re_upper)
    report.re_upper = re_upper_bound(rho, opts.optimizer);
  return report;
}

std::string report_to_json(const MeasureReport& report) {
  json j;
  j["entropy"] = number(report.entropy);
  j["concurrence"] = number(report.concurrence);
  j["ef_wootters"] = number(report.ef_wootters);
  j["mre_seed"] = number(report.mre_seed);
  j["mre_optimized"] = number(report.mre_optimized);
  if (report.re_upper) j["re_upper"] = number(*report.re_upper);
  j["ppt_separable"] = report.ppt_separable;
  j["ensemble_used"] = decomposition_json(report.ensemble_used);
  return j.dump(2);
}

std::string opt_result_to_json(const OptResult& result) {
  json j;
  j["seed_value"] = number(result.seed_value);
  j["best_value"] = number(result.best_value);
  j["evaluations"] = result.evaluations;
  j["converged"] = result.converged;
  j["ensemble"] = decomposition_json(result.best);
  return j.dump(2);
}

ExtWernerReport ext_werner_report(const ExtWernerParams& p,
                                  const MeasureOptions& opts) {
  ExtWernerReport report{
      ext_werner_eigenvalues(p),
      ext_werner_mre(p),
      ext_werner_separable(p),
      0.0,
      {},
  };
  DensityMatrix rho = ext_werner(p);
  report.mre_pipeline = mre_of_decomposition(rho, ext_werner_ensemble(p)).value;
  report.measure = measure_state(rho, opts);
  return report;
}

std::string ext_werner_report_to_json(const ExtWernerReport& report) {
  json closed;
  closed["eigenvalues"] = {number(report.eigenvalues[0]), number(report.eigenvalues[1]),
                           number(report.eigenvalues[2]), number(report.eigenvalues[3])};
  closed["mre"] = number(report.mre_closed);
  closed["separable"] = report.separable;
  closed["mre_pipeline"] = number(report.mre_pipeline);

  json j = json::parse(report_to_json(report.measure));
  j["closed_form"] = closed;
  return j.dump(2);
}

std::string werner_sweep_csv(double from, double to, double step) {
  if (from < 0.0 || to > 1.0 || from > to || step <= 0.0)
    throw std::invalid_argument("werner sweep: need 0 <= from <= to <= 1, step > 0");
  std::ostringstream out;
  out << "F,mre_closed,mre_pipeline,ef_wootters,ppt\n";
  const int n = static_cast<int>(std::floor((to - from) / step + 1e-9));
  for (int i = 0; i <= n; ++i) {
    double f = from + i * step;
    if (f > 1.0) f = 1.0;
    DensityMatrix rho = werner(f);
    double pipeline = mre_of_decomposition(rho, werner_ensemble(f)).value;
    out << format_sig(f) << ',' << format_sig(werner_mre(f)) << ','
        << format_sig(pipeline) << ',' << format_sig(ef_wootters(rho).ef) << ','
        << (ppt_separable(rho) ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace mre
