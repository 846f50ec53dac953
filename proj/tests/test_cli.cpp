#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "mre/closedform.hpp"
#include "mre/states.hpp"

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(MRE_CLI_PATH) + " " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

fs::path write_temp(const std::string& name, const std::string& text) {
  fs::path path = fs::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

std::string matrix_json(const mre::CMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return json{{"matrix", rows}}.dump();
}

const std::string kFast = " --restarts 4 --iters 300";

}  // namespace

TEST_CASE("measure on a pure Bell state") {
  auto path = write_temp("cli_phi.json",
                         R"({"pure": [[0.7071067811865476,0],[0,0],[0,0],[0.7071067811865476,0]]})");
  RunResult r = run("measure " + path.string() + kFast);
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(rep.at("ef_wootters").get<double>() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep.at("mre_optimized").get<double>() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep.at("concurrence").get<double>() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_FALSE(rep.at("ppt_separable").get<bool>());
  CHECK(rep.at("entropy").get<double>() == doctest::Approx(0.0).epsilon(1e-9));
  // Round trip: every required field is present.
  for (const char* key : {"entropy", "concurrence", "ef_wootters", "mre_seed",
                          "mre_optimized", "ppt_separable", "ensemble_used"})
    CHECK(rep.contains(key));
}

TEST_CASE("measure on werner(0.5) reports the seed value") {
  auto path = write_temp("cli_w05.json", matrix_json(mre::werner(0.5).matrix()));
  RunResult r = run("measure " + path.string() + " --no-optimize");
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(rep.at("mre_seed").get<double>() ==
        doctest::Approx(0.12581458369391152).epsilon(1e-9));
}

TEST_CASE("measure on a separable Bell mixture") {
  mre::CMatrix m = 0.5 * mre::bell(mre::Bell::PhiPlus).projector() +
                   0.5 * mre::bell(mre::Bell::PsiPlus).projector();
  auto path = write_temp("cli_mix.json", matrix_json(m));
  RunResult r = run("measure " + path.string() + kFast);
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(rep.at("mre_optimized").get<double>() <= 1e-4);
  CHECK(rep.at("ppt_separable").get<bool>());
  CHECK(rep.at("mre_optimized").get<double>() <=
        rep.at("mre_seed").get<double>() + 1e-12);
}

TEST_CASE("sweep-werner CSV") {
  RunResult r = run("sweep-werner --from 0.25 --to 1.0 --step 0.05");
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "F,mre_closed,mre_pipeline,ef_wootters,ppt");

  int rows = 0;
  std::string line;
  while (std::getline(lines, line)) {
    ++rows;
    std::istringstream cells(line);
    std::string f, closed, pipeline, ef, ppt;
    std::getline(cells, f, ',');
    std::getline(cells, closed, ',');
    std::getline(cells, pipeline, ',');
    std::getline(cells, ef, ',');
    std::getline(cells, ppt, ',');
    double fv = std::stod(f);
    CHECK(std::abs(std::stod(closed) - mre::werner_mre(fv)) <= 1e-9);
    CHECK(std::abs(std::stod(pipeline) - std::stod(closed)) <= 1e-9);
    CHECK(ppt == (fv <= 0.5 + 1e-12 ? "true" : "false"));
    if (std::abs(fv - 0.25) < 1e-9) CHECK(std::stod(closed) == 0.0);
    if (std::abs(fv - 0.4) < 1e-9)
      CHECK(std::abs(std::stod(closed) - 0.04902249956730631) <= 1e-9);
    if (std::abs(fv - 1.0) < 1e-9) {
      CHECK(std::abs(std::stod(closed) - 1.0) <= 1e-9);
      CHECK(std::abs(std::stod(ef) - 1.0) <= 1e-9);
    }
  }
  CHECK(rows == 16);

  RunResult again = run("sweep-werner --from 0.25 --to 1.0 --step 0.05");
  CHECK(again.out == r.out);  // bit-stable

  CHECK(run("sweep-werner --from 0.9 --to 0.1 --step 0.05").exit_code == 2);
  CHECK(run("sweep-werner --from 0 --to 1 --step -0.1").exit_code == 2);
}

TEST_CASE("ext-werner reports") {
  mre::ExtWernerParams w07 = mre::ExtWernerParams::from_werner(0.7);
  char args[256];
  std::snprintf(args, sizeof(args),
                "ext-werner --b %.17g %.17g %.17g %.17g --c 0 0 0 0%s",
                w07.b[0], w07.b[1], w07.b[2], w07.b[3], kFast.c_str());
  RunResult r = run(args);
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK_FALSE(rep.at("closed_form").at("separable").get<bool>());
  CHECK(std::abs(rep.at("closed_form").at("mre").get<double>() -
                 rep.at("closed_form").at("mre_pipeline").get<double>()) <= 1e-9);

  r = run("ext-werner --b 0 0 0 0 --c 0.25 0.25 0.25 0.25" + kFast);
  REQUIRE(r.exit_code == 0);
  rep = json::parse(r.out);
  CHECK(rep.at("closed_form").at("mre").get<double>() == 0.0);
  CHECK(rep.at("closed_form").at("separable").get<bool>());

  CHECK(run("ext-werner --b 0.5 0.5 0.5 0 --c 0 0 0 0").exit_code == 2);
}

TEST_CASE("optimize is deterministic and monotone") {
  auto pure = write_temp("cli_opt_pure.json",
                         R"({"pure": [[0,0],[0.7071067811865476,0],[-0.7071067811865476,0],[0,0]]})");
  RunResult r = run("optimize " + pure.string() + kFast + " --seed 3");
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(rep.at("best_value").get<double>() == doctest::Approx(1.0).epsilon(1e-9));

  auto w04 = write_temp("cli_w04.json", matrix_json(mre::werner(0.4).matrix()));
  RunResult a = run("optimize " + w04.string() + kFast + " --seed 5");
  RunResult b = run("optimize " + w04.string() + kFast + " --seed 5");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);  // byte-identical JSON
  json ja = json::parse(a.out);
  CHECK(ja.at("seed_value").get<double>() ==
        doctest::Approx(0.04902249956730631).epsilon(1e-6));
  CHECK(ja.at("best_value").get<double>() <=
        ja.at("seed_value").get<double>() + 1e-12);
}

TEST_CASE("exit codes and diagnostics") {
  auto bad_json = write_temp("cli_bad.json", "{not json");
  RunResult r = run("measure " + bad_json.string(), true);
  CHECK(r.exit_code == 2);
  CHECK_FALSE(r.out.empty());

  auto bad_trace = write_temp("cli_trace.json",
                              matrix_json(2.0 * mre::werner(0.5).matrix()));
  CHECK(run("measure " + bad_trace.string()).exit_code == 3);

  mre::CMatrix neg = mre::CMatrix::Zero(4, 4);
  neg.diagonal() << 0.6, 0.6, -0.1, -0.1;
  auto bad_neg = write_temp("cli_neg.json", matrix_json(neg));
  CHECK(run("measure " + bad_neg.string()).exit_code == 3);

  CHECK(run("measure /nonexistent/state.json").exit_code == 2);
  CHECK(run("measure").exit_code == 2);
  CHECK(run("bogus-command").exit_code == 2);
  CHECK(run("measure x.json --format xml").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
}
