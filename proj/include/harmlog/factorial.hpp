#pragma once

#include <cstdint>
#include <string_view>

#include "harmlog/summation.hpp"

// Factorial estimates, all evaluated in log space. n! passes the binary64
// range at n = 171, so `ln_value` is the authoritative field and `value`
// is only its exponential (+inf once that overflows).

namespace harmlog::factorial {

/// Constant of the integral closed form of Σ_{x=2..n} 1/(x³(2x-1)).
inline constexpr double kClosedFormOffset = 0.06739495647;
/// ln of the leading constant in the raw formula: 1 - kClosedFormOffset.
inline constexpr double kRawLogConstant = 1.0 - kClosedFormOffset;
/// Empirical constants of the corrected formula.
inline constexpr double kCorrectedLogConstant = 1.83788;
inline constexpr double kCorrectedQuadratic = 10.0 / 33.0;
inline constexpr double kCorrectedShift = 200.0 / 387.0;

enum class FactorialMethod { series_exact, raw, corrected };

std::string_view to_string(FactorialMethod m) noexcept;

struct FactorialEstimate {
  std::int64_t n = 0;
  double ln_value = 0.0;
  double value = 0.0;
  FactorialMethod method = FactorialMethod::corrected;
};

/// Σ_{x=2..n} 1/(x³(2x-1)), compensated, smallest terms first. n >= 2.
double s_sum_exact(std::int64_t n, Summation mode = Summation::compensated);

/// 0.06739495647 + 2(1/n + 1/(4n²)) + 4·ln(1 - 1/(2n)), the integral
/// stand-in for s_sum_exact. n >= 2.
double s_sum_closed(std::int64_t n);

/// (n + 1/2)·ln n - (n - 1) - s_sum_exact(n); 0 at n = 1.
double ln_factorial_series(std::int64_t n, Summation mode = Summation::compensated);

FactorialEstimate factorial_series(std::int64_t n, Summation mode = Summation::compensated);

/// ln n! ≈ c + ½ln n + n(ln n - 1) - 2(1/n + 1/(4n²)) - 4·ln(1 - 1/(2n)),
/// c = kRawLogConstant. n >= 2.
FactorialEstimate factorial_raw(std::int64_t n);

/// ln n! ≈ ½(1.83788 + ln n) + n(ln n - 1) - 2(1/n + 10/(33n²))
///         - 4·ln(1 - 200/(387n)). n >= 2.
FactorialEstimate factorial_corrected(std::int64_t n);

FactorialEstimate estimate(std::int64_t n, FactorialMethod method);

}  // namespace harmlog::factorial
