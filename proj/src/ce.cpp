#include "ceis/ce.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ceis {

void CEConfig::validate() const {
  if (!(rho > 0.0 && rho < 1.0)) throw ValidationError("rho must lie in (0, 1)");
  if (n_pilot == 0 || static_cast<double>(n_pilot) * rho < 1.0) {
    throw ValidationError("n_pilot * rho must be at least 1");
  }
  if (max_iter < 1) throw ValidationError("max_iter must be at least 1");
  if (workers == 0) throw ValidationError("worker count must be at least 1");
}

double adaptive_level(std::span<const double> sums, double rho) {
  if (sums.empty()) throw DomainError("adaptive level: empty sample");
  if (!(rho > 0.0 && rho < 1.0)) throw DomainError("adaptive level: rho must lie in (0, 1)");
  const auto n = sums.size();
  // rho * n is often an integer computed with a rounding error upward.
  auto k = static_cast<std::size_t>(std::ceil(rho * static_cast<double>(n) * (1.0 - 1e-12)));
  k = std::clamp<std::size_t>(k, 1, n);
  std::vector<double> work(sums.begin(), sums.end());
  std::nth_element(work.begin(), work.begin() + static_cast<std::ptrdiff_t>(k - 1), work.end());
  return work[k - 1];
}

std::vector<double> ce_update(const SampleBlock& samples, std::span<const double> log_weights,
                              double level) {
  if (log_weights.size() != samples.size()) {
    throw DomainError("ce_update: one log-weight per sample required");
  }
  double max_lw = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples.sums[i] <= level) max_lw = std::max(max_lw, log_weights[i]);
  }
  if (!std::isfinite(max_lw)) {
    throw DegenerateUpdate("ce_update: no sample with finite weight at or below level " +
                           std::to_string(level));
  }
  std::vector<CompensatedSum> num(samples.dim);
  CompensatedSum den;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples.sums[i] > level) continue;
    const double w = std::exp(log_weights[i] - max_lw);
    den.add(w);
    const auto x = samples.row(i);
    for (std::size_t l = 0; l < samples.dim; ++l) num[l].add(w * x[l]);
  }
  std::vector<double> nu(samples.dim);
  for (std::size_t l = 0; l < samples.dim; ++l) nu[l] = num[l].value() / den.value();
  return nu;
}

CEResult ce_optimize(const Scenario& s, double gamma0, const CEConfig& cfg) {
  s.validate();
  cfg.validate();
  if (!(gamma0 > 0.0)) throw DomainError("threshold gamma0 must be positive");
  const auto densities = make_densities(s.branches);

  CEResult result;
  result.nu.nu = s.lambdas();
  for (int t = 1; t <= cfg.max_iter; ++t) {
    const std::uint64_t seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(t));
    const SampleBlock block = kernels::sample_biased_block(result.nu.nu, cfg.n_pilot, seed, cfg.workers);
    const double level = std::max(adaptive_level(block.sums, cfg.rho), gamma0);
    const auto log_w = kernels::elite_log_weights(block, densities, result.nu.nu, level);
    std::vector<double> next = ce_update(block, log_w, level);

    CEIteration rec;
    rec.t = t;
    rec.gamma_hat = level;
    rec.nu_hat = next;
    rec.hit_fraction =
        static_cast<double>(std::count_if(block.sums.begin(), block.sums.end(),
                                          [level](double v) { return v <= level; })) /
        static_cast<double>(block.size());
    result.trace.iterations.push_back(std::move(rec));
    result.nu.nu = std::move(next);
    result.nu.validate();
    if (level == gamma0) return result;
  }
  throw NoConvergence("cross-entropy search stopped after " + std::to_string(cfg.max_iter) +
                      " iterations above the target level");
}

}  // namespace ceis
