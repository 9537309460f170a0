#include <cmath>
#include <limits>

#include "ceis/kernels.hpp"
#include "kernel_detail.hpp"

namespace ceis::reference {

TermAccumulator naive_terms(std::span<const BranchDensity> branches, double gamma0,
                            std::uint64_t n, std::uint64_t seed, unsigned workers) {
  detail::check_inputs(branches, {}, workers);
  TermAccumulator total;
  std::vector<double> x(branches.size());
  for (unsigned w = 0; w < workers; ++w) {
    RngStream rng(seed, w);
    TermAccumulator acc;
    const auto [first, last] = partition_range(n, workers, w);
    for (std::uint64_t i = first; i < last; ++i) {
      acc.add(1.0, detail::draw_mixture_row(branches, rng, x.data()) <= gamma0);
    }
    total.merge(acc);
  }
  return total;
}

TermAccumulator is_terms(std::span<const BranchDensity> branches, std::span<const double> nu,
                         double gamma0, std::uint64_t n, std::uint64_t seed, unsigned workers) {
  detail::check_inputs(branches, nu, workers);
  const std::vector<double> neg_log_nu = detail::neg_log(nu);
  TermAccumulator total;
  std::vector<double> x(nu.size());
  for (unsigned w = 0; w < workers; ++w) {
    RngStream rng(seed, w);
    TermAccumulator acc;
    const auto [first, last] = partition_range(n, workers, w);
    for (std::uint64_t i = first; i < last; ++i) {
      const double s = detail::draw_biased_row(nu, rng, x.data());
      const double weight = std::exp(detail::row_log_ratio(branches, nu, neg_log_nu, x.data()));
      const bool hit = s <= gamma0;
      acc.add(hit ? weight : 0.0, hit);
    }
    total.merge(acc);
  }
  return total;
}

SampleBlock sample_biased_block(std::span<const double> nu, std::uint64_t n, std::uint64_t seed,
                                unsigned workers) {
  detail::check_inputs({}, nu, workers);
  SampleBlock block;
  block.dim = nu.size();
  std::vector<double> x(nu.size());
  for (unsigned w = 0; w < workers; ++w) {
    RngStream rng(seed, w);
    const auto [first, last] = partition_range(n, workers, w);
    for (std::uint64_t i = first; i < last; ++i) {
      block.sums.push_back(detail::draw_biased_row(nu, rng, x.data()));
      block.values.insert(block.values.end(), x.begin(), x.end());
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
  std::vector<double> out;
  out.reserve(block.size());
  for (std::size_t i = 0; i < block.size(); ++i) {
    out.push_back(block.sums[i] <= level
                      ? detail::row_log_ratio(branches, nu, neg_log_nu, block.row(i).data())
                      : -std::numeric_limits<double>::infinity());
  }
  return out;
}

}  // namespace ceis::reference
