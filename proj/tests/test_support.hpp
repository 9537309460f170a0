#pragma once

#include <cmath>
#include <vector>

#include "ceis/branch_params.hpp"
#include "ceis/estimators.hpp"

namespace ceis::test {

// Table values of the two fitted turbulence models.
inline constexpr double kLambdas[] = {0.5389, 0.9786, 0.4854, 0.224};

inline BranchParams ln_branch(int l) {
  return BranchParams::exp_lognormal(0.2045, kLambdas[l], 0.1117, 0.0253);
}

inline BranchParams gg_branch(int l) {
  return BranchParams::exp_gen_gamma(0.4876, kLambdas[l], 3.275, 1.45, 1.0);
}

inline Scenario scenario_of(std::vector<BranchParams> b) {
  Scenario s;
  s.branches = std::move(b);
  s.snr_per_symbol_db = 10.0;
  return s;
}

inline Scenario ln_scenario(int L) {
  std::vector<BranchParams> b;
  for (int l = 0; l < L; ++l) b.push_back(ln_branch(l));
  return scenario_of(b);
}

inline Scenario gg_scenario(int L) {
  std::vector<BranchParams> b;
  for (int l = 0; l < L; ++l) b.push_back(gg_branch(l));
  return scenario_of(b);
}

/// Pure exponential branches (omega = 1) with the given means.
inline Scenario exponential_scenario(std::vector<double> lambdas) {
  std::vector<BranchParams> b;
  for (double m : lambdas) b.push_back(BranchParams::exp_lognormal(1.0, m, 0.0, 1.0));
  return scenario_of(b);
}

inline double rel_diff(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

}  // namespace ceis::test
