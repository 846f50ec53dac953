// Command-line driver: measure reports, Werner sweeps, extended-Werner
// reports and ensemble optimization, emitting JSON or CSV.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mre/report.hpp"
#include "mre/state_io.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;

struct CommonFlags {
  std::string format = "json";
  std::uint64_t seed = 0;
  int restarts = 32;
  int iters = 2000;
  int ensemble_size = 0;
  bool no_optimize = false;
  bool re_upper = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_optimizer = true) {
  cmd->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  if (with_optimizer) {
    cmd->add_option("--seed", flags.seed, "Optimizer RNG seed");
    cmd->add_option("--restarts", flags.restarts, "Optimizer restarts")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--iters", flags.iters, "Iterations per restart")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--ensemble-size", flags.ensemble_size,
                    "Ensemble size cap (0 = automatic)");
    cmd->add_flag("--no-optimize", flags.no_optimize, "Skip the ensemble search");
    cmd->add_flag("--re-upper", flags.re_upper,
                  "Also compute the separable-search RE upper bound");
  }
}

mre::MeasureOptions to_options(const CommonFlags& flags) {
  mre::MeasureOptions opts;
  opts.optimizer.seed = flags.seed;
  opts.optimizer.restarts = flags.restarts;
  opts.optimizer.max_iterations = flags.iters;
  opts.optimizer.ensemble_size = flags.ensemble_size;
  opts.optimize = !flags.no_optimize;
  opts.compute_re_upper = flags.re_upper;
  return opts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit entanglement measures"};
  app.require_subcommand(1);

  CommonFlags measure_flags, sweep_flags, ext_flags, opt_flags;
  std::string measure_path, opt_path;
  double sweep_from = 0.0, sweep_to = 1.0, sweep_step = 0.05;
  std::vector<double> ext_b, ext_c;

  CLI::App* measure = app.add_subcommand("measure", "Measure report for a state file");
  measure->add_option("path", measure_path, "State file (JSON)")->required();
  add_common(measure, measure_flags);

  CLI::App* sweep = app.add_subcommand("sweep-werner", "Werner-family CSV sweep");
  sweep->add_option("--from", sweep_from, "Start of the F grid");
  sweep->add_option("--to", sweep_to, "End of the F grid");
  sweep->add_option("--step", sweep_step, "Grid step");
  add_common(sweep, sweep_flags, false);

  CLI::App* ext = app.add_subcommand("ext-werner", "Extended-Werner report");
  ext->add_option("--b", ext_b, "Bell weights b1..b4")->expected(4)->required();
  ext->add_option("--c", ext_c, "Basis weights c1..c4")->expected(4)->required();
  add_common(ext, ext_flags);

  CLI::App* opt = app.add_subcommand("optimize", "Ensemble search for a state file");
  opt->add_option("path", opt_path, "State file (JSON)")->required();
  add_common(opt, opt_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::fputs((std::string(e.what()) + "\n").c_str(), stderr);
    return kExitUsage;
  }

  try {
    if (measure->parsed()) {
      mre::StateFile state = mre::load_state_file(measure_path);
      mre::MeasureReport report =
          mre::measure_state(state.rho, to_options(measure_flags));
      std::cout << mre::report_to_json(report) << "\n";
    } else if (sweep->parsed()) {
      std::cout << mre::werner_sweep_csv(sweep_from, sweep_to, sweep_step);
    } else if (ext->parsed()) {
      mre::ExtWernerParams params;
      for (int i = 0; i < 4; ++i) {
        params.b[i] = ext_b[i];
        params.c[i] = ext_c[i];
      }
      params.check();
      mre::ExtWernerReport report =
          mre::ext_werner_report(params, to_options(ext_flags));
      std::cout << mre::ext_werner_report_to_json(report) << "\n";
    } else if (opt->parsed()) {
      mre::StateFile state = mre::load_state_file(opt_path);
      mre::MeasureOptions opts = to_options(opt_flags);
      mre::OptResult result = mre::optimize_mre(state.rho, opts.optimizer);
      std::cout << mre::opt_result_to_json(result) << "\n";
    }
  } catch (const mre::parse_error& e) {
    std::fputs((std::string(e.what()) + "\n").c_str(), stderr);
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fputs((std::string(e.what()) + "\n").c_str(), stderr);
    return kExitUsage;
  } catch (const mre::validation_error& e) {
    std::fputs((std::string(e.what()) + "\n").c_str(), stderr);
    return kExitValidation;
  }
  return 0;
}
