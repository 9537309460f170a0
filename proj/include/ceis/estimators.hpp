#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "ceis/accumulator.hpp"
#include "ceis/distributions.hpp"
#include "ceis/kernels.hpp"

namespace ceis {

/// Confidence constant of a two-sided 95% normal interval.
inline constexpr double kDefaultConfidence = 1.96;

/// L independent branches observed at a given SNR per symbol, swept over a
/// threshold grid.
struct Scenario {
  std::vector<BranchParams> branches;
  double snr_per_symbol_db = 10.0;
  std::vector<double> thresholds_db;

  std::size_t size() const noexcept { return branches.size(); }
  /// Branch means lambda_l, the starting point of the cross-entropy search.
  std::vector<double> lambdas() const;
  /// Throws ValidationError on an empty branch list, an invalid branch or a
  /// grid that is not strictly increasing.
  void validate() const;
};

struct EstimateResult {
  double p_hat = 0.0;
  double second_moment = 0.0;  ///< mean of squared per-sample terms
  double variance = 0.0;       ///< sample variance of per-sample terms (n - 1 denominator)
  std::uint64_t n = 0;
  double relative_error = std::numeric_limits<double>::infinity();
  std::uint64_t seed = 0;
  std::uint64_t hit_count = 0;
};

/// Crude Monte Carlo with samples from the true mixtures. A run without hits
/// returns p_hat = 0 and an infinite relative error.
EstimateResult naive_mc(const Scenario& s, double gamma0, std::uint64_t n, std::uint64_t seed,
                        unsigned workers = kDefaultWorkers);

/// Importance-sampling estimate with samples from the exponential product
/// density of means `nu`. Throws DegenerateEstimate when no sample hits.
EstimateResult is_estimate(const Scenario& s, double gamma0, const BiasedParams& nu,
                           std::uint64_t n, std::uint64_t seed,
                           unsigned workers = kDefaultWorkers);

/// Naive estimate from already computed sums S_L(X_i).
EstimateResult naive_from_sums(std::span<const double> sums, double gamma0, std::uint64_t seed = 0);

/// Turns accumulated indicator terms (all terms 0 or 1) into a naive estimate.
EstimateResult finish_naive(const TermAccumulator& acc, std::uint64_t seed);
/// Turns accumulated weighted terms into an IS estimate (no hit check).
EstimateResult finish_weighted(const TermAccumulator& acc, std::uint64_t seed);

}  // namespace ceis
