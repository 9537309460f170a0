#pragma once

#include <cmath>
#include <cstdint>

namespace ceis {

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }

  void merge(const CompensatedSum& other) noexcept {
    add(other.sum_);
    add(other.comp_);
  }

  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Running totals of per-sample estimator terms 1{hit} * weight.
/// Merging is deterministic for a fixed merge order.
struct TermAccumulator {
  CompensatedSum sum;
  CompensatedSum sum_sq;
  std::uint64_t n = 0;
  std::uint64_t hits = 0;

  void add(double term, bool hit) noexcept {
    ++n;
    if (!hit) return;
    ++hits;
    sum.add(term);
    sum_sq.add(term * term);
  }

  void merge(const TermAccumulator& other) noexcept {
    sum.merge(other.sum);
    sum_sq.merge(other.sum_sq);
    n += other.n;
    hits += other.hits;
  }
};

}  // namespace ceis
