#pragma once

// Sampling kernels behind the estimators and the cross-entropy optimizer.
//
// Work of n samples is split into `workers` contiguous partitions; partition
// w draws from RngStream(seed, w) and partial results are merged in partition
// order. The output is therefore a function of (inputs, seed, workers) only,
// independent of the OpenMP thread count. Changing `workers` changes which
// stream feeds which sample but not the distribution of the result.
//
// `ceis::kernels` holds the OpenMP implementations; `ceis::reference` holds
// plain serial loops over the same partitions, kept for testing and as the
// benchmark baseline. Both must agree bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ceis/accumulator.hpp"
#include "ceis/distributions.hpp"

namespace ceis {

inline constexpr unsigned kDefaultWorkers = 8;

/// Half-open sample range [first, second) owned by partition w.
std::pair<std::uint64_t, std::uint64_t> partition_range(std::uint64_t n, unsigned workers,
                                                        unsigned w) noexcept;

/// n draws of an L-vector stored row-major, with the row sums alongside.
struct SampleBlock {
  std::size_t dim = 0;
  std::vector<double> values;
  std::vector<double> sums;

  std::size_t size() const noexcept { return sums.size(); }
  std::span<const double> row(std::size_t i) const noexcept {
    return {values.data() + i * dim, dim};
  }

  /// Builds a block from explicit rows; all rows must share one length.
  static SampleBlock from_rows(const std::vector<std::vector<double>>& rows);
};

std::vector<BranchDensity> make_densities(std::span<const BranchParams> branches);

namespace kernels {

/// Indicator terms 1{S_L(X) <= gamma0} with X drawn from the true mixtures.
TermAccumulator naive_terms(std::span<const BranchDensity> branches, double gamma0,
                            std::uint64_t n, std::uint64_t seed, unsigned workers);

/// Weighted terms 1{S_L(X) <= gamma0} * f(X)/f*(X) with X from the biasing density.
TermAccumulator is_terms(std::span<const BranchDensity> branches, std::span<const double> nu,
                         double gamma0, std::uint64_t n, std::uint64_t seed, unsigned workers);

SampleBlock sample_biased_block(std::span<const double> nu, std::uint64_t n, std::uint64_t seed,
                                unsigned workers);

/// Log-likelihood ratios of each row against `nu`; -inf for rows whose sum
/// exceeds `level` (they carry no weight in the update).
std::vector<double> elite_log_weights(const SampleBlock& block,
                                      std::span<const BranchDensity> branches,
                                      std::span<const double> nu, double level);

}  // namespace kernels

namespace reference {

TermAccumulator naive_terms(std::span<const BranchDensity> branches, double gamma0,
                            std::uint64_t n, std::uint64_t seed, unsigned workers);

TermAccumulator is_terms(std::span<const BranchDensity> branches, std::span<const double> nu,
                         double gamma0, std::uint64_t n, std::uint64_t seed, unsigned workers);

SampleBlock sample_biased_block(std::span<const double> nu, std::uint64_t n, std::uint64_t seed,
                                unsigned workers);

std::vector<double> elite_log_weights(const SampleBlock& block,
                                      std::span<const BranchDensity> branches,
                                      std::span<const double> nu, double level);

}  // namespace reference

}  // namespace ceis
