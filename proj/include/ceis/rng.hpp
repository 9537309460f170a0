#pragma once

#include <cstdint>
#include <cmath>
#include <random>

namespace ceis {

/// Mixes a master seed with a tag into a new 64-bit seed (SplitMix64 finalizer).
/// Used to give each pipeline stage (CE iteration, production run, naive run)
/// its own seed without overlapping stream ids.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t tag) noexcept;

/// A reproducible random stream identified by (master_seed, stream_id).
///
/// Streams with equal identifiers yield identical sequences. Distinct stream
/// ids seed the engine through std::seed_seq with both words, which gives
/// decorrelated initial states. Not thread-safe; give each worker its own.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint32_t stream_id);

  std::uint64_t master_seed() const noexcept { return master_seed_; }
  std::uint32_t stream_id() const noexcept { return stream_id_; }

  /// Uniform on the open interval (0, 1); never returns 0 or 1.
  double uniform() noexcept {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Exponential with the given mean, by inverse CDF of one uniform.
  double exponential(double mean) noexcept { return -mean * std::log(uniform()); }

  double normal() { return normal_(engine_); }

  /// Gamma(shape, 1) by Marsaglia-Tsang squeeze/rejection. Exact.
  double gamma(double shape);

 private:
  std::uint64_t master_seed_;
  std::uint32_t stream_id_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

}  // namespace ceis
