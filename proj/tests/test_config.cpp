#include <filesystem>
#include <fstream>

#include "ceis/config.hpp"
#include "ceis/errors.hpp"
#include "doctest.h"

using namespace ceis;

TEST_CASE("presets carry the fitted parameters") {
  const auto names = preset_names();
  CHECK(names.size() == 4);

  const auto ln2 = preset_scenario("exp-ln-l2");
  REQUIRE(ln2.size() == 2);
  CHECK(ln2.snr_per_symbol_db == 10.0);
  CHECK(ln2.branches[0].model == FadingModel::ExpLogNormal);
  CHECK(ln2.branches[0].omega == 0.2045);
  CHECK(ln2.branches[0].mu == 0.1117);
  CHECK(ln2.branches[0].sigma == 0.0253);
  CHECK(ln2.branches[0].lambda == 0.5389);
  CHECK(ln2.branches[1].lambda == 0.9786);

  const auto gg4 = preset_scenario("exp-gg-l4");
  REQUIRE(gg4.size() == 4);
  const double lambdas[] = {0.5389, 0.9786, 0.4854, 0.224};
  for (std::size_t l = 0; l < 4; ++l) {
    CAPTURE(l);
    CHECK(gg4.branches[l].model == FadingModel::ExpGenGamma);
    CHECK(gg4.branches[l].omega == 0.4876);
    CHECK(gg4.branches[l].alpha == 3.275);
    CHECK(gg4.branches[l].beta == 1.45);
    CHECK(gg4.branches[l].omega_gg == 1.0);
    CHECK(gg4.branches[l].lambda == lambdas[l]);
  }

  const auto grid = default_threshold_grid();
  REQUIRE(grid.size() == 16);
  CHECK(grid.front() == -10.0);
  CHECK(grid.back() == 5.0);
  CHECK(ln2.thresholds_db == grid);

  CHECK_THROWS_AS(preset_scenario("exp-ln-l3"), ValidationError);
}

TEST_CASE("preset config defaults") {
  const auto cfg = preset_config("exp-ln-l4");
  CHECK(cfg.preset == "exp-ln-l4");
  CHECK(cfg.ce.rho == 0.01);
  CHECK(cfg.ce.n_pilot == 10000);
  CHECK(cfg.n_production == 10000);
  CHECK(cfg.n_naive == 10000000);
  CHECK(cfg.eps0 == 0.05);
  CHECK(cfg.c == 1.96);
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("parse a preset with overrides") {
  const auto cfg = parse_config(R"(# sweep setup
preset = exp-gg-l2
thresholds_db = -10:-8:1   # three points
rho = 0.05
n_production = 2e4
seed = 18446744073709551615
trace = true
output = out/x.csv
)");
  CHECK(cfg.scenario.thresholds_db == std::vector<double>{-10.0, -9.0, -8.0});
  CHECK(cfg.ce.rho == 0.05);
  CHECK(cfg.n_production == 20000);
  CHECK(cfg.seed == 18446744073709551615ULL);
  CHECK(cfg.emit_trace);
  CHECK(cfg.output_path == std::filesystem::path("out/x.csv"));
  CHECK(cfg.scenario.branches[1].alpha == 3.275);
}

TEST_CASE("parse an explicit scenario") {
  const auto cfg = parse_config(
      "model = exp-ln\n"
      "lambda = 1, 0.5, 0.25\n"
      "omega = 1\n"
      "mu = 0.1, 0.2, 0.3\n"
      "sigma = 0.5\n"
      "thresholds_db = -3, 0\n");
  REQUIRE(cfg.scenario.size() == 3);
  CHECK(cfg.scenario.branches[2].lambda == 0.25);
  CHECK(cfg.scenario.branches[1].mu == 0.2);
  CHECK(cfg.scenario.branches[2].sigma == 0.5);
  CHECK(cfg.scenario.branches[0].omega == 1.0);
  CHECK(cfg.scenario.thresholds_db == std::vector<double>{-3.0, 0.0});
}

TEST_CASE("out-of-range values are rejected") {
  CHECK_THROWS_AS(parse_config("preset = exp-ln-l2\nomega = 1.5\n"), ValidationError);
  CHECK_THROWS_AS(parse_config("preset = exp-ln-l2\nlambda = 1, -1\n"), ValidationError);
  CHECK_THROWS_AS(parse_config("preset = exp-ln-l2\nrho = 0\n"), ValidationError);
  CHECK_THROWS_AS(parse_config("preset = exp-ln-l2\nn_production = 0\n"), ValidationError);
  CHECK_THROWS_AS(parse_config("preset = exp-ln-l2\nmu = 1, 2, 3\n"), ValidationError);
  CHECK_THROWS_AS(parse_config("omega = 0.5\n"), ValidationError);

  try {
    parse_config("preset = exp-ln-l2\nomega = 1.5\n");
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("omega") != std::string::npos);
  }
}

TEST_CASE("an empty threshold grid is rejected") {
  CHECK_THROWS_AS(parse_config("preset = exp-ln-l2\nthresholds_db = 5:0:1\n"), ValidationError);
  auto cfg = preset_config("exp-ln-l2");
  cfg.scenario.thresholds_db.clear();
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
}

namespace {

ParseError parse_error_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError("", 0, "");
}

}  // namespace

TEST_CASE("parse errors name the line and field") {
  {
    const auto e = parse_error_of("preset = exp-ln-l2\n\nbogus = 1\n");
    CHECK(e.line() == 3);
    CHECK(e.field() == "bogus");
  }
  {
    const auto e = parse_error_of("preset = exp-ln-l2\nrho = 0.1\nrho = 0.2\n");
    CHECK(e.line() == 3);
    CHECK(e.field() == "rho");
  }
  {
    const auto e = parse_error_of("preset = exp-ln-l2\nn_naive = lots\n");
    CHECK(e.line() == 2);
    CHECK(e.field() == "n_naive");
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  {
    const auto e = parse_error_of("preset = exp-ln-l2\nlambda = 1, x\n");
    CHECK(e.field() == "lambda");
  }
  {
    const auto e = parse_error_of("preset = exp-ln-l2\nseed =\n");
    CHECK(e.field() == "seed");
  }
  {
    const auto e = parse_error_of("preset exp-ln-l2\n");
    CHECK(e.line() == 1);
  }
  {
    const auto e = parse_error_of("preset = exp-ln-l2\nthresholds_db = 1:2\n");
    CHECK(e.field() == "thresholds_db");
  }
  {
    const auto e = parse_error_of("preset = exp-ln-l2\nmodel = rayleigh\n");
    CHECK(e.field() == "model");
  }
}

TEST_CASE("load_config reads a file") {
  const auto dir = std::filesystem::current_path() / "test_config_files";
  std::filesystem::create_directories(dir);
  const auto path = dir / "run.cfg";
  {
    std::ofstream out(path);
    out << "preset = exp-ln-l4\nn_naive = 1000\n";
  }
  const auto cfg = load_config(path);
  CHECK(cfg.scenario.size() == 4);
  CHECK(cfg.n_naive == 1000);
  CHECK_THROWS_AS(load_config(dir / "missing.cfg"), ParseError);
  std::filesystem::remove_all(dir);
}
