#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace ceis::oracle {

namespace detail {

inline constexpr int kMaxIntervals = 4000;

template <class F>
double fixed_panels(F& f, double a, double b, int panels) {
  double total = 0.0;
  const double h = (b - a) / panels;
  for (int k = 0; k < panels; ++k) {
    const double lo = a + k * h;
    const double hi = (k + 1 == panels) ? b : lo + h;
    total += boost::math::quadrature::gauss<double, 30>::integrate(f, lo, hi);
  }
  return total;
}

struct Piece {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Piece& o) const { return error < o.error; }
};

template <class F>
Piece kronrod_piece(F& f, double a, double b) {
  double err = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 0, 0.0, &err);
  return {a, b, v, err};
}

// Globally adaptive Gauss-Kronrod: bisects the piece with the largest error
// estimate until the total error meets max(abs_tol, rel_tol |total|) or the
// interval budget runs out.
template <class F>
Integral adaptive_kronrod(F& f, const std::vector<double>& pts, double abs_tol, double rel_tol) {
  std::priority_queue<Piece> heap;
  double value = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Piece p = kronrod_piece(f, pts[i], pts[i + 1]);
    value += p.value;
    error += p.error;
    heap.push(p);
  }
  while (!heap.empty() && error > std::max(abs_tol, rel_tol * std::fabs(value)) &&
         static_cast<int>(heap.size()) < kMaxIntervals) {
    const Piece worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      heap.push(worst);
      break;
    }
    const Piece left = kronrod_piece(f, worst.a, mid);
    const Piece right = kronrod_piece(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Recompute the totals to drop the drift of the running updates.
  value = 0.0;
  error = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  return {value, error};
}

}  // namespace detail

template <class F>
Integral integrate(F&& f, double a, double b, std::span<const double> cuts, const QuadratureSpec& q,
                   double rel_tol) {
  std::vector<double> pts{a};
  for (double c : cuts) {
    if (c > a && c < b) pts.push_back(c);
  }
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::function<double(double)> fn = std::forward<F>(f);
  if (q.scheme == QuadratureScheme::Adaptive) {
    return detail::adaptive_kronrod(fn, pts, 1e-3 * q.abs_error_target, rel_tol);
  }
  Integral out{0.0, 0.0};
  const int panels = std::max(1, (q.node_count + 29) / 30);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double coarse = detail::fixed_panels(fn, pts[i], pts[i + 1], panels);
    const double fine = detail::fixed_panels(fn, pts[i], pts[i + 1], 2 * panels);
    out.value += fine;
    out.error += std::fabs(fine - coarse);
  }
  return out;
}

}  // namespace ceis::oracle
