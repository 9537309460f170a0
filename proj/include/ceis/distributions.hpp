#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "ceis/branch_params.hpp"
#include "ceis/rng.hpp"

namespace ceis {

/// Component log-densities are floored here before the log-sum.
inline constexpr double kLogDensityFloor = -745.0;

/// Per-branch exponential scales of the product biasing density.
struct BiasedParams {
  std::vector<double> nu;

  std::size_t size() const noexcept { return nu.size(); }
  /// Throws DomainError unless every entry is positive and finite.
  void validate() const;
};

/// Mixture density of one branch with the parameter-only terms precomputed.
/// This is the evaluation path shared by the public density function and the
/// sampling kernels.
class BranchDensity {
 public:
  explicit BranchDensity(const BranchParams& p);

  const BranchParams& params() const noexcept { return params_; }

  /// log f(x) for x > 0; no argument checking.
  double log_pdf(double x) const noexcept {
    const double exp_part = log_omega_ - log_lambda_ - x / params_.lambda;
    if (params_.omega == 1.0) return exp_part;
    const double other = other_log_pdf(x);
    if (params_.omega == 0.0) return other;
    return log_sum(std::max(exp_part, kLogDensityFloor), std::max(other, kLogDensityFloor));
  }

  /// One variate from the mixture. The component selector consumes a uniform
  /// only when 0 < omega < 1.
  double sample(RngStream& rng) const {
    bool exponential = params_.omega == 1.0;
    if (params_.omega > 0.0 && params_.omega < 1.0) exponential = rng.uniform() < params_.omega;
    if (exponential) return rng.exponential(params_.lambda);
    if (params_.model == FadingModel::ExpLogNormal) {
      return std::exp(params_.mu + params_.sigma * rng.normal());
    }
    const double g = rng.gamma(params_.alpha);
    return std::pow(params_.omega_gg * g / params_.alpha, 1.0 / params_.beta);
  }

 private:
  static double log_sum(double a, double b) noexcept {
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
  }

  double other_log_pdf(double x) const noexcept {
    const double lx = std::log(x);
    if (params_.model == FadingModel::ExpLogNormal) {
      const double z = (lx - params_.mu) / params_.sigma;
      return other_norm_ - lx - 0.5 * z * z;
    }
    return other_norm_ + (params_.alpha * params_.beta - 1.0) * lx -
           gg_rate_ * std::pow(x, params_.beta);
  }

  BranchParams params_;
  double log_omega_;
  double log_lambda_;
  double other_norm_;  // log of the second component's constant factor, weight included
  double gg_rate_ = 0.0;
};

/// Natural log of the branch mixture density at x > 0.
/// Throws DomainError for x <= 0 or invalid parameters.
double mixture_log_pdf(const BranchParams& p, double x);

/// Draws one variate from the branch mixture.
double sample_branch(const BranchParams& p, RngStream& rng);

/// log of the exponential density with mean nu_l: -log(nu_l) - x / nu_l.
/// Defined for x >= 0; throws DomainError for x < 0 or nu_l <= 0.
double biased_log_pdf(double nu_l, double x);

/// One vector from the product of exponentials, component l with mean nu[l].
std::vector<double> sample_biased(const BiasedParams& nu, RngStream& rng);

/// sum_l [log f_l(x_l) - log f*_l(x_l)]. Throws DomainError on length
/// mismatch or nonpositive entries.
double log_likelihood_ratio(std::span<const double> x, std::span<const BranchParams> branches,
                            const BiasedParams& nu);

/// Normalized threshold gamma0 = 10^(gamma_th/10) / 10^(snr/10).
double threshold_linear(double gamma_th_db, double snr_per_symbol_db) noexcept;

}  // namespace ceis
