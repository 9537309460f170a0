#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ceis/estimators.hpp"
#include "ceis/kernels.hpp"

namespace ceis {

struct CEConfig {
  double rho = 0.01;             ///< elite fraction defining each intermediate level
  std::uint64_t n_pilot = 10000; ///< samples drawn per iteration
  int max_iter = 50;
  std::uint64_t seed = 0;
  unsigned workers = kDefaultWorkers;

  /// Throws ValidationError unless 0 < rho < 1, n_pilot * rho >= 1, max_iter >= 1.
  void validate() const;
};

struct CEIteration {
  int t = 0;
  double gamma_hat = 0.0;
  std::vector<double> nu_hat;
  double hit_fraction = 0.0;  ///< share of the pilot sample at or below gamma_hat
};

struct CETrace {
  std::vector<CEIteration> iterations;
};

struct CEResult {
  BiasedParams nu;
  CETrace trace;
};

/// The ceil(rho * n)-th smallest element of `sums`. Throws DomainError on an
/// empty input or rho outside (0, 1).
double adaptive_level(std::span<const double> sums, double rho);

/// Self-normalized weighted mean of the elite rows (sum <= level), weights
/// exp(log_weights). The maximum elite log-weight is subtracted before
/// exponentiation. Throws DegenerateUpdate when no row is elite.
std::vector<double> ce_update(const SampleBlock& samples, std::span<const double> log_weights,
                              double level);

/// Multilevel cross-entropy search for the exponential biasing scales.
///
/// Starts at nu = lambda. Iteration t samples cfg.n_pilot vectors at the
/// previous scales (seed derive_seed(cfg.seed, t)), sets the level to the
/// rho-quantile of the sums floored at gamma0, and moves the scales to the
/// likelihood-ratio weighted mean of the elite samples. Returns once the
/// level reaches gamma0; throws NoConvergence after cfg.max_iter iterations.
CEResult ce_optimize(const Scenario& s, double gamma0, const CEConfig& cfg);

}  // namespace ceis
