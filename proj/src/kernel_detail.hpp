#pragma once

// Per-sample steps shared by the OpenMP kernels and the serial reference.

#include <cmath>
#include <span>
#include <vector>

#include "ceis/distributions.hpp"

namespace ceis::detail {

/// Fills x with one draw per branch, in branch order, and returns the sum.
inline double draw_mixture_row(std::span<const BranchDensity> branches, RngStream& rng,
                               double* x) {
  double s = 0.0;
  for (std::size_t l = 0; l < branches.size(); ++l) {
    x[l] = branches[l].sample(rng);
    s += x[l];
  }
  return s;
}

inline double draw_biased_row(std::span<const double> nu, RngStream& rng, double* x) {
  double s = 0.0;
  for (std::size_t l = 0; l < nu.size(); ++l) {
    x[l] = rng.exponential(nu[l]);
    s += x[l];
  }
  return s;
}

inline std::vector<double> neg_log(std::span<const double> nu) {
  std::vector<double> out(nu.size());
  for (std::size_t l = 0; l < nu.size(); ++l) out[l] = -std::log(nu[l]);
  return out;
}

/// sum_l log f_l(x_l) - log f*_l(x_l), with -log(nu_l) precomputed.
inline double row_log_ratio(std::span<const BranchDensity> branches, std::span<const double> nu,
                            std::span<const double> neg_log_nu, const double* x) {
  double total = 0.0;
  for (std::size_t l = 0; l < branches.size(); ++l) {
    total += branches[l].log_pdf(x[l]) - (neg_log_nu[l] - x[l] / nu[l]);
  }
  return total;
}

void check_inputs(std::span<const BranchDensity> branches, std::span<const double> nu,
                  unsigned workers);

}  // namespace ceis::detail
