#include <omp.h>

#include <cmath>
#include <limits>

#include "ceis/kernels.hpp"
#include "kernel_detail.hpp"

namespace ceis {

std::pair<std::uint64_t, std::uint64_t> partition_range(std::uint64_t n, unsigned workers,
                                                        unsigned w) noexcept {
  const std::uint64_t base = n / workers;
  const std::uint64_t extra = n % workers;
  const std::uint64_t first = w * base + std::min<std::uint64_t>(w, extra);
  return {first, first + base + (w < extra ? 1 : 0)};
}

SampleBlock SampleBlock::from_rows(const std::vector<std::vector<double>>& rows) {
  SampleBlock block;
  block.dim = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != block.dim) throw DomainError("sample block: ragged rows");
    double s = 0.0;
    for (double v : r) {
      block.values.push_back(v);
      s += v;
    }
    block.sums.push_back(s);
  }
  return block;
}

std::vector<BranchDensity> make_densities(std::span<const BranchParams> branches) {
  return {branches.begin(), branches.end()};
}

namespace detail {

void check_inputs(std::span<const BranchDensity> branches, std::span<const double> nu,
                  unsigned workers) {
  if (workers == 0) throw DomainError("worker count must be at least 1");
  if (!nu.empty() && !branches.empty() && nu.size() != branches.size()) {
    throw DomainError("biasing parameters: length differs from branch count");
  }
}

}  // namespace detail

namespace kernels {

TermAccumulator naive_terms(std::span<const BranchDensity> branches, double gamma0,
                            std::uint64_t n, std::uint64_t seed, unsigned workers) {
  detail::check_inputs(branches, {}, workers);
  std::vector<TermAccumulator> parts(workers);
  const int nw = static_cast<int>(workers);
#pragma omp parallel for schedule(static)
  for (int w = 0; w < nw; ++w) {
    RngStream rng(seed, static_cast<std::uint32_t>(w));
    std::vector<double> x(branches.size());
    TermAccumulator acc;
    const auto [first, last] = partition_range(n, workers, static_cast<unsigned>(w));
    for (std::uint64_t i = first; i < last; ++i) {
      const bool hit = detail::draw_mixture_row(branches, rng, x.data()) <= gamma0;
      acc.add(1.0, hit);
    }
    parts[w] = acc;
  }
  TermAccumulator total;
  for (const auto& p : parts) total.merge(p);
  return total;
}

TermAccumulator is_terms(std::span<const BranchDensity> branches, std::span<const double> nu,
                         double gamma0, std::uint64_t n, std::uint64_t seed, unsigned workers) {
  detail::check_inputs(branches, nu, workers);
  const std::vector<double> neg_log_nu = detail::neg_log(nu);
  std::vector<TermAccumulator> parts(workers);
  const int nw = static_cast<int>(workers);
#pragma omp parallel for schedule(static)
  for (int w = 0; w < nw; ++w) {
    RngStream rng(seed, static_cast<std::uint32_t>(w));
    std::vector<double> x(nu.size());
    TermAccumulator acc;
    const auto [first, last] = partition_range(n, workers, static_cast<unsigned>(w));
    for (std::uint64_t i = first; i < last; ++i) {
      const bool hit = detail::draw_biased_row(nu, rng, x.data()) <= gamma0;
      // Misses contribute a zero term, so the ratio is only needed on hits.
      const double term =
          hit ? std::exp(detail::row_log_ratio(branches, nu, neg_log_nu, x.data())) : 0.0;
      acc.add(term, hit);
    }
    parts[w] = acc;
  }
  TermAccumulator total;
  for (const auto& p : parts) total.merge(p);
  return total;
}

SampleBlock sample_biased_block(std::span<const double> nu, std::uint64_t n, std::uint64_t seed,
                                unsigned workers) {
  detail::check_inputs({}, nu, workers);
  SampleBlock block;
  block.dim = nu.size();
  block.values.resize(n * nu.size());
  block.sums.resize(n);
  const int nw = static_cast<int>(workers);
#pragma omp parallel for schedule(static)
  for (int w = 0; w < nw; ++w) {
    RngStream rng(seed, static_cast<std::uint32_t>(w));
    const auto [first, last] = partition_range(n, workers, static_cast<unsigned>(w));
    for (std::uint64_t i = first; i < last; ++i) {
      block.sums[i] = detail::draw_biased_row(nu, rng, block.values.data() + i * nu.size());
    }
  }
  return block;
}

std::vector<double> elite_log_weights(const SampleBlock& block,
                                      std::span<const BranchDensity> branches,
                                      std::span<const double> nu, double level) {
  detail::check_inputs(branches, nu, 1);
  if (block.dim != nu.size()) throw DomainError("sample block: dimension mismatch");
  const std::vector<double> neg_log_nu = detail::neg_log(nu);
  std::vector<double> out(block.size(), -std::numeric_limits<double>::infinity());
  const auto rows = static_cast<std::int64_t>(block.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) {
    if (block.sums[i] <= level) {
      out[i] = detail::row_log_ratio(branches, nu, neg_log_nu, block.values.data() + i * block.dim);
    }
  }
  return out;
}

}  // namespace kernels
}  // namespace ceis
