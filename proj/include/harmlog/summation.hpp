#pragma once

#include <cmath>
#include <cstdint>

namespace harmlog {

/// Accumulation mode for the index-range series. `compensated` is the
/// default everywhere; `naive` exists for comparison runs.
enum class Summation { naive, compensated };

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Sums term(k) for k = last, last-1, ..., first. Terms of the series in
/// this library shrink with k, so descending order adds the smallest
/// magnitudes first. An empty range (last < first) yields exactly 0.
template <class Term>
double sum_descending(std::int64_t first, std::int64_t last, Term&& term,
                      Summation mode = Summation::compensated) {
  if (mode == Summation::naive) {
    double s = 0.0;
    for (std::int64_t k = last; k >= first; --k) s += term(k);
    return s;
  }
  CompensatedSum s;
  for (std::int64_t k = last; k >= first; --k) s.add(term(k));
  return s.value();
}

}  // namespace harmlog
