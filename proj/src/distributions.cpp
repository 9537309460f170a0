#include "ceis/distributions.hpp"

#include <numbers>
#include <string>

namespace ceis {

void BiasedParams::validate() const {
  if (nu.empty()) throw DomainError("biasing parameters: empty scale vector");
  for (std::size_t l = 0; l < nu.size(); ++l) {
    if (!(std::isfinite(nu[l]) && nu[l] > 0.0)) {
      throw DomainError("biasing scale nu_" + std::to_string(l + 1) + " must be positive and finite");
    }
  }
}

BranchDensity::BranchDensity(const BranchParams& p) : params_(p) {
  params_.validate();
  log_omega_ = std::log(p.omega);
  log_lambda_ = std::log(p.lambda);
  const double log_rest = std::log1p(-p.omega);
  if (p.model == FadingModel::ExpLogNormal) {
    other_norm_ = log_rest - std::log(p.sigma) - 0.5 * std::log(2.0 * std::numbers::pi);
  } else {
    // beta (alpha/Omega)^alpha x^(alpha beta - 1) exp(-(alpha/Omega) x^beta) / Gamma(alpha)
    gg_rate_ = p.alpha / p.omega_gg;
    other_norm_ = log_rest + std::log(p.beta) + p.alpha * std::log(gg_rate_) - std::lgamma(p.alpha);
  }
}

double mixture_log_pdf(const BranchParams& p, double x) {
  if (!(x > 0.0)) throw DomainError("mixture density: x must be positive");
  return BranchDensity(p).log_pdf(x);
}

double sample_branch(const BranchParams& p, RngStream& rng) { return BranchDensity(p).sample(rng); }

double biased_log_pdf(double nu_l, double x) {
  if (!(nu_l > 0.0)) throw DomainError("biased density: scale must be positive");
  if (!(x >= 0.0)) throw DomainError("biased density: x must be nonnegative");
  return -std::log(nu_l) - x / nu_l;
}

std::vector<double> sample_biased(const BiasedParams& nu, RngStream& rng) {
  nu.validate();
  std::vector<double> x(nu.size());
  for (std::size_t l = 0; l < x.size(); ++l) x[l] = rng.exponential(nu.nu[l]);
  return x;
}

double log_likelihood_ratio(std::span<const double> x, std::span<const BranchParams> branches,
                            const BiasedParams& nu) {
  if (x.size() != branches.size() || x.size() != nu.size()) {
    throw DomainError("likelihood ratio: dimension mismatch");
  }
  double total = 0.0;
  for (std::size_t l = 0; l < x.size(); ++l) {
    total += mixture_log_pdf(branches[l], x[l]) - biased_log_pdf(nu.nu[l], x[l]);
  }
  return total;
}

double threshold_linear(double gamma_th_db, double snr_per_symbol_db) noexcept {
  return std::pow(10.0, gamma_th_db / 10.0) / std::pow(10.0, snr_per_symbol_db / 10.0);
}

}  // namespace ceis
