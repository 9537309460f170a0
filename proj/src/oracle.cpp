#include "ceis/oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "ceis/errors.hpp"

namespace ceis::oracle {

void QuadratureSpec::validate() const {
  if (!(upper_cutoff > 0.0)) throw DomainError("quadrature: upper cutoff must be positive");
  if (node_count < 64) throw DomainError("quadrature: node_count must be at least 64");
  if (!(abs_error_target > 0.0 && abs_error_target <= 1e-10)) {
    throw DomainError("quadrature: error target must lie in (0, 1e-10]");
  }
}

double hypoexponential_cdf(std::span<const double> lambdas, double t) {
  if (lambdas.empty()) throw DomainError("hypoexponential: no stages");
  if (!(t > 0.0)) throw DomainError("hypoexponential: t must be positive");
  std::vector<long double> rates;
  for (double m : lambdas) {
    if (!(m > 0.0)) throw DomainError("hypoexponential: means must be positive");
    rates.push_back(1.0L / static_cast<long double>(m));
  }
  for (std::size_t i = 0; i < rates.size(); ++i) {
    for (std::size_t k = i + 1; k < rates.size(); ++k) {
      if (std::fabs(rates[i] - rates[k]) <= 1e-12L * std::max(rates[i], rates[k])) {
        throw DomainError("hypoexponential: repeated means; use the quadrature oracle");
      }
    }
  }
  // CDF = sum_l c_l (1 - e^{-r_l t}) since sum_l c_l = 1.
  long double cdf = 0.0L;
  const long double tt = t;
  for (std::size_t i = 0; i < rates.size(); ++i) {
    long double c = 1.0L;
    for (std::size_t k = 0; k < rates.size(); ++k) {
      if (k != i) c *= rates[k] / (rates[k] - rates[i]);
    }
    cdf -= c * std::expm1(-rates[i] * tt);
  }
  return static_cast<double>(std::clamp(cdf, 0.0L, 1.0L));
}

double mixture_pdf(const BranchParams& p, double x) {
  if (!(x > 0.0)) return 0.0;
  const double expo = p.omega / p.lambda * std::exp(-x / p.lambda);
  double other;
  if (p.model == FadingModel::ExpLogNormal) {
    const double z = (std::log(x) - p.mu) / p.sigma;
    other = std::exp(-0.5 * z * z) / (x * p.sigma * std::sqrt(2.0 * std::numbers::pi));
  } else {
    const double rate = p.alpha / p.omega_gg;
    other = std::exp(std::log(p.beta) + p.alpha * std::log(rate) +
                     (p.alpha * p.beta - 1.0) * std::log(x) - rate * std::pow(x, p.beta) -
                     std::lgamma(p.alpha));
  }
  return expo + (1.0 - p.omega) * other;
}

double mixture_cdf_closed_form(const BranchParams& p, double x) {
  if (!(x > 0.0)) return 0.0;
  const double expo = -std::expm1(-x / p.lambda);
  double other;
  if (p.model == FadingModel::ExpLogNormal) {
    other = 0.5 * std::erfc(-(std::log(x) - p.mu) / (p.sigma * std::numbers::sqrt2));
  } else {
    other = boost::math::gamma_p(p.alpha, p.alpha / p.omega_gg * std::pow(x, p.beta));
  }
  return p.omega * expo + (1.0 - p.omega) * other;
}

std::vector<double> breakpoints(const BranchParams& p) {
  std::vector<double> cuts;
  for (double k : {0.1, 1.0, 5.0, 20.0, 50.0}) cuts.push_back(k * p.lambda);
  if (p.model == FadingModel::ExpLogNormal) {
    for (double z : {-12.0, -8.0, -5.0, -3.0, -1.5, 0.0, 1.5, 3.0, 5.0, 8.0, 12.0}) {
      cuts.push_back(std::exp(p.mu + z * p.sigma));
    }
  } else {
    // x = (Omega u / alpha)^(1/beta) for u around the Gamma(alpha) bulk.
    for (double k : {0.01, 0.05, 0.2, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0}) {
      cuts.push_back(std::pow(p.omega_gg * k * std::max(p.alpha, 1.0) / p.alpha, 1.0 / p.beta));
    }
  }
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

double mixture_cdf_quadrature(const BranchParams& p, double gamma0, const QuadratureSpec& q) {
  p.validate();
  q.validate();
  if (!(gamma0 > 0.0)) throw DomainError("mixture CDF: gamma0 must be positive");
  const double upper = std::min(gamma0, q.upper_cutoff);
  const auto cuts = breakpoints(p);
  const Integral r = integrate([&p](double x) { return mixture_pdf(p, x); }, 0.0, upper, cuts, q);
  if (!(r.error <= q.abs_error_target)) {
    throw QuadratureNotConverged("mixture CDF quadrature: error estimate " + std::to_string(r.error));
  }
  return std::clamp(r.value, 0.0, 1.0);
}

double sum_cdf_convolution_l2(const BranchParams& p1, const BranchParams& p2, double gamma0,
                              const QuadratureSpec& q) {
  p1.validate();
  p2.validate();
  q.validate();
  if (!(gamma0 > 0.0)) throw DomainError("convolution CDF: gamma0 must be positive");
  const double upper = std::min(gamma0, q.upper_cutoff);
  std::vector<double> cuts = breakpoints(p1);
  for (double b : breakpoints(p2)) cuts.push_back(upper - b);
  auto integrand = [&](double x) {
    const double rest = upper - x;
    if (!(rest > 0.0)) return 0.0;
    return mixture_pdf(p1, x) * mixture_cdf_quadrature(p2, rest, q);
  };
  // The inner CDF carries ~1e-12 relative noise, which bounds the outer tolerance.
  const Integral r = integrate(integrand, 0.0, upper, cuts, q, 1e-10);
  const double target = std::max(1e-8, q.abs_error_target);
  if (!(r.error <= target)) {
    throw QuadratureNotConverged("convolution quadrature: error estimate " + std::to_string(r.error));
  }
  return std::clamp(r.value, 0.0, 1.0);
}

}  // namespace ceis::oracle
