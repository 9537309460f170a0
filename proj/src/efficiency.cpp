#include "ceis/efficiency.hpp"

#include <cmath>
#include <limits>

namespace ceis {

namespace {

void check_accuracy(double eps0, double c) {
  if (!(eps0 > 0.0)) throw DomainError("accuracy eps0 must be positive");
  if (!(c > 0.0)) throw DomainError("confidence constant must be positive");
}

}  // namespace

double runs_naive(double p, double eps0, double c) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("runs_naive: probability must lie in (0, 1)");
  check_accuracy(eps0, c);
  const double k = c / (p * eps0);
  return p * (1.0 - p) * k * k;
}

double runs_is(double variance, double p, double eps0, double c) {
  if (!(variance >= 0.0)) throw DomainError("runs_is: variance must be nonnegative");
  if (!(p > 0.0)) throw DomainError("runs_is: probability must be positive");
  check_accuracy(eps0, c);
  const double k = c / (p * eps0);
  return variance * k * k;
}

double relative_error(const EstimateResult& r, double c) {
  if (!(r.p_hat > 0.0)) return std::numeric_limits<double>::infinity();
  return c * std::sqrt(r.variance / static_cast<double>(r.n)) / r.p_hat;
}

EfficiencyReport make_report(const EstimateResult& is, double eps0, double c) {
  EfficiencyReport rep;
  rep.p_ref = is.p_hat;
  rep.eps0 = eps0;
  rep.c = c;
  rep.runs_naive = runs_naive(is.p_hat, eps0, c);
  rep.runs_is = runs_is(is.variance, is.p_hat, eps0, c);
  rep.gain = rep.runs_naive / rep.runs_is;
  return rep;
}

}  // namespace ceis
