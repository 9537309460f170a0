#pragma once

#include "ceis/estimators.hpp"

namespace ceis {

inline constexpr double kDefaultAccuracy = 0.05;

/// Samples each estimator needs for relative accuracy eps0 at confidence c.
struct EfficiencyReport {
  double p_ref = 0.0;
  double eps0 = kDefaultAccuracy;
  double c = 1.96;
  double runs_naive = 0.0;
  double runs_is = 0.0;
  double gain = 0.0;  ///< runs_naive / runs_is
};

/// Naive Monte Carlo sample count p(1-p) (c / (p eps0))^2. Requires 0 < p < 1.
double runs_naive(double p, double eps0, double c);

/// Importance-sampling sample count variance (c / (p eps0))^2, where variance
/// is the per-sample variance of the weighted indicator.
double runs_is(double variance, double p, double eps0, double c);

/// Half-width of the c-level interval over the estimate; +inf when p_hat = 0.
double relative_error(const EstimateResult& r, double c);

/// Report built from an IS estimate, which supplies both p and the variance.
EfficiencyReport make_report(const EstimateResult& is, double eps0, double c);

}  // namespace ceis
