#include "ceis/config.hpp"

namespace ceis {

namespace {

constexpr double kLambdas[] = {0.5389, 0.9786, 0.4854, 0.224};

// Exponential-lognormal fit.
constexpr double kLnOmega = 0.2045;
constexpr double kLnMu = 0.1117;
constexpr double kLnSigma = 0.0253;

// Exponential-generalized-Gamma fit. The scale Omega has no published value;
// 1.0 is used unless a configuration overrides it.
constexpr double kGgOmega = 0.4876;
constexpr double kGgAlpha = 3.275;
constexpr double kGgBeta = 1.45;
constexpr double kGgScale = 1.0;

Scenario make(FadingModel model, int branches) {
  Scenario s;
  s.snr_per_symbol_db = 10.0;
  s.thresholds_db = default_threshold_grid();
  for (int l = 0; l < branches; ++l) {
    s.branches.push_back(model == FadingModel::ExpLogNormal
                             ? BranchParams::exp_lognormal(kLnOmega, kLambdas[l], kLnMu, kLnSigma)
                             : BranchParams::exp_gen_gamma(kGgOmega, kLambdas[l], kGgAlpha,
                                                           kGgBeta, kGgScale));
  }
  return s;
}

}  // namespace

std::vector<double> default_threshold_grid() {
  std::vector<double> grid;
  for (int db = -10; db <= 5; ++db) grid.push_back(db);
  return grid;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"exp-ln-l2", "exp-ln-l4", "exp-gg-l2", "exp-gg-l4"};
  return names;
}

Scenario preset_scenario(std::string_view name) {
  if (name == "exp-ln-l2") return make(FadingModel::ExpLogNormal, 2);
  if (name == "exp-ln-l4") return make(FadingModel::ExpLogNormal, 4);
  if (name == "exp-gg-l2") return make(FadingModel::ExpGenGamma, 2);
  if (name == "exp-gg-l4") return make(FadingModel::ExpGenGamma, 4);
  throw ValidationError("unknown preset '" + std::string(name) + "'");
}

RunConfig preset_config(std::string_view name) {
  RunConfig cfg;
  cfg.preset = std::string(name);
  cfg.scenario = preset_scenario(name);
  return cfg;
}

}  // namespace ceis
