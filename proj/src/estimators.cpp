#include "ceis/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ceis/efficiency.hpp"

namespace ceis {

std::vector<double> Scenario::lambdas() const {
  std::vector<double> out;
  out.reserve(branches.size());
  for (const auto& b : branches) out.push_back(b.lambda);
  return out;
}

void Scenario::validate() const {
  if (branches.empty()) throw ValidationError("scenario needs at least one branch");
  for (std::size_t l = 0; l < branches.size(); ++l) {
    try {
      branches[l].validate();
    } catch (const DomainError& e) {
      throw ValidationError("branch " + std::to_string(l + 1) + ": " + e.what());
    }
  }
  if (!std::isfinite(snr_per_symbol_db)) throw ValidationError("SNR per symbol must be finite");
  for (std::size_t i = 1; i < thresholds_db.size(); ++i) {
    if (!(thresholds_db[i] > thresholds_db[i - 1])) {
      throw ValidationError("threshold grid must be strictly increasing");
    }
  }
}

namespace {

void check_run(double gamma0, std::uint64_t n) {
  if (!(gamma0 > 0.0)) throw DomainError("threshold gamma0 must be positive");
  if (n == 0) throw DomainError("sample count must be at least 1");
}

double finish_relative_error(const EstimateResult& r) {
  return r.p_hat > 0.0 ? relative_error(r, kDefaultConfidence)
                       : std::numeric_limits<double>::infinity();
}

}  // namespace

EstimateResult finish_naive(const TermAccumulator& acc, std::uint64_t seed) {
  EstimateResult r;
  r.n = acc.n;
  r.seed = seed;
  r.hit_count = acc.hits;
  const double n = static_cast<double>(acc.n);
  r.p_hat = static_cast<double>(acc.hits) / n;
  r.second_moment = r.p_hat;
  r.variance = acc.n > 1 ? r.p_hat * (1.0 - r.p_hat) * n / (n - 1.0) : 0.0;
  r.relative_error = finish_relative_error(r);
  return r;
}

EstimateResult finish_weighted(const TermAccumulator& acc, std::uint64_t seed) {
  EstimateResult r;
  r.n = acc.n;
  r.seed = seed;
  r.hit_count = acc.hits;
  const double n = static_cast<double>(acc.n);
  const double sum = acc.sum.value();
  const double sum_sq = acc.sum_sq.value();
  r.p_hat = sum / n;
  r.second_moment = sum_sq / n;
  r.variance = acc.n > 1 ? std::max(0.0, (sum_sq - sum * r.p_hat) / (n - 1.0)) : 0.0;
  r.relative_error = finish_relative_error(r);
  return r;
}

EstimateResult naive_mc(const Scenario& s, double gamma0, std::uint64_t n, std::uint64_t seed,
                        unsigned workers) {
  check_run(gamma0, n);
  const auto densities = make_densities(s.branches);
  return finish_naive(kernels::naive_terms(densities, gamma0, n, seed, workers), seed);
}

EstimateResult is_estimate(const Scenario& s, double gamma0, const BiasedParams& nu,
                           std::uint64_t n, std::uint64_t seed, unsigned workers) {
  check_run(gamma0, n);
  nu.validate();
  if (nu.size() != s.size()) throw DomainError("biasing parameters: length differs from branch count");
  const auto densities = make_densities(s.branches);
  const TermAccumulator acc = kernels::is_terms(densities, nu.nu, gamma0, n, seed, workers);
  if (acc.hits == 0) {
    throw DegenerateEstimate("importance sampling: no sample fell below the threshold");
  }
  return finish_weighted(acc, seed);
}

EstimateResult naive_from_sums(std::span<const double> sums, double gamma0, std::uint64_t seed) {
  if (sums.empty()) throw DomainError("sample count must be at least 1");
  TermAccumulator acc;
  for (double s : sums) acc.add(1.0, s <= gamma0);
  return finish_naive(acc, seed);
}

}  // namespace ceis
