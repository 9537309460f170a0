#pragma once

// Ground-truth calculators for tests and reproduction checks. Densities and
// CDFs here are written out directly from the model formulas; nothing in this
// module calls into the sampling or estimation code.

#include <span>
#include <vector>

#include "ceis/branch_params.hpp"

namespace ceis::oracle {

enum class QuadratureScheme { Adaptive, Fixed };

struct QuadratureSpec {
  double upper_cutoff = 1e6;  ///< integrals never extend past this point
  int node_count = 64;        ///< Fixed: minimum Gauss nodes per subinterval
  QuadratureScheme scheme = QuadratureScheme::Adaptive;
  double abs_error_target = 1e-10;

  void validate() const;
};

/// P(E_1 + ... + E_L <= t) for independent exponentials with distinct means
/// lambdas[l], evaluated in extended precision. Throws DomainError on repeated
/// means (within 1e-12 relative) or t <= 0.
double hypoexponential_cdf(std::span<const double> lambdas, double t);

/// Branch mixture density written out directly.
double mixture_pdf(const BranchParams& p, double x);

/// Branch mixture CDF from the normal CDF and the regularized incomplete gamma.
double mixture_cdf_closed_form(const BranchParams& p, double x);

/// Points where the branch density changes character (mode, narrow peaks).
std::vector<double> breakpoints(const BranchParams& p);

/// Integral of the branch density over (0, min(gamma0, upper_cutoff)).
/// Throws QuadratureNotConverged if the error estimate exceeds the target.
double mixture_cdf_quadrature(const BranchParams& p, double gamma0, const QuadratureSpec& q = {});

/// P(X_1 + X_2 <= gamma0) as the integral of f_1(x) F_2(gamma0 - x) over
/// (0, gamma0), F_2 itself by quadrature. Error target max(1e-8, q's target).
double sum_cdf_convolution_l2(const BranchParams& p1, const BranchParams& p2, double gamma0,
                              const QuadratureSpec& q = {});

struct Integral {
  double value;
  double error;  ///< estimated absolute error
};

/// 1-D integral over [a, b], first split at `cuts`. The adaptive scheme stops
/// once the error estimate is below max(1e-3 * q.abs_error_target,
/// rel_tol * |value|); the fixed scheme compares two panel counts.
template <class F>
Integral integrate(F&& f, double a, double b, std::span<const double> cuts, const QuadratureSpec& q,
                   double rel_tol = 1e-12);

}  // namespace ceis::oracle

#include "ceis/oracle_impl.hpp"
