#pragma once

#include <cmath>
#include <string>

#include "ceis/errors.hpp"

namespace ceis {

enum class FadingModel {
  ExpLogNormal,  ///< exponential + lognormal
  ExpGenGamma,   ///< exponential + generalized Gamma
};

/// One diversity branch: an exponential component of weight omega mixed with
/// a lognormal or generalized-Gamma component of weight 1 - omega.
/// Only the shape fields of the selected model are read.
struct BranchParams {
  FadingModel model = FadingModel::ExpLogNormal;
  double omega = 1.0;   ///< weight of the exponential component
  double lambda = 1.0;  ///< exponential mean
  double mu = 0.0;      ///< lognormal location (natural log)
  double sigma = 1.0;   ///< lognormal scale
  double alpha = 1.0;   ///< GG shape
  double beta = 1.0;    ///< GG power
  double omega_gg = 1.0;  ///< GG scale

  static BranchParams exp_lognormal(double omega, double lambda, double mu, double sigma) {
    BranchParams p;
    p.model = FadingModel::ExpLogNormal;
    p.omega = omega;
    p.lambda = lambda;
    p.mu = mu;
    p.sigma = sigma;
    return p;
  }

  static BranchParams exp_gen_gamma(double omega, double lambda, double alpha, double beta,
                                    double omega_gg = 1.0) {
    BranchParams p;
    p.model = FadingModel::ExpGenGamma;
    p.omega = omega;
    p.lambda = lambda;
    p.alpha = alpha;
    p.beta = beta;
    p.omega_gg = omega_gg;
    return p;
  }

  /// Throws DomainError naming the first violated constraint.
  void validate() const {
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!(omega >= 0.0 && omega <= 1.0)) {
      throw DomainError("mixture weight omega must lie in [0, 1], got " + std::to_string(omega));
    }
    if (!positive(lambda)) throw DomainError("exponential scale lambda must be positive");
    if (model == FadingModel::ExpLogNormal) {
      if (!std::isfinite(mu)) throw DomainError("lognormal location mu must be finite");
      if (!positive(sigma)) throw DomainError("lognormal scale sigma must be positive");
    } else {
      if (!positive(alpha)) throw DomainError("generalized-Gamma shape alpha must be positive");
      if (!positive(beta)) throw DomainError("generalized-Gamma power beta must be positive");
      if (!positive(omega_gg)) throw DomainError("generalized-Gamma scale Omega must be positive");
    }
  }

  friend bool operator==(const BranchParams&, const BranchParams&) = default;
};

inline std::string to_string(FadingModel m) {
  return m == FadingModel::ExpLogNormal ? "exp-ln" : "exp-gg";
}

}  // namespace ceis
