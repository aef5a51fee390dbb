#include "harmlog/factorial.hpp"

#include <cmath>

#include <fmt/format.h>

#include "harmlog/error.hpp"
#include "harmlog/oracle.hpp"

namespace harmlog::factorial {
namespace {

void require_at_least(std::int64_t n, std::int64_t lo, std::string_view what) {
  if (n < lo) fail(ErrorKind::domain, fmt::format("{} needs n >= {}, got {}", what, lo, n));
}

FactorialEstimate make(std::int64_t n, double ln_value, FactorialMethod method) {
  return {n, ln_value, std::exp(ln_value), method};
}

double ln(std::int64_t n) { return oracle::ln_ref(static_cast<double>(n)).value; }

}  // namespace

std::string_view to_string(FactorialMethod m) noexcept {
  switch (m) {
    case FactorialMethod::series_exact: return "series";
    case FactorialMethod::raw: return "raw";
    case FactorialMethod::corrected: return "corrected";
  }
  return "unknown";
}

double s_sum_exact(std::int64_t n, Summation mode) {
  require_at_least(n, 2, "s_sum_exact");
  return sum_descending(
      2, n,
      [](std::int64_t k) {
        const double kd = static_cast<double>(k);
        return 1.0 / (kd * kd * kd * (2.0 * kd - 1.0));
      },
      mode);
}

double s_sum_closed(std::int64_t n) {
  require_at_least(n, 2, "s_sum_closed");
  const double nd = static_cast<double>(n);
  return kClosedFormOffset + 2.0 * (1.0 / nd + 1.0 / (4.0 * nd * nd)) +
         4.0 * std::log1p(-1.0 / (2.0 * nd));
}

double ln_factorial_series(std::int64_t n, Summation mode) {
  require_at_least(n, 1, "ln_factorial_series");
  if (n == 1) return 0.0;
  const double nd = static_cast<double>(n);
  return (nd + 0.5) * ln(n) - (nd - 1.0) - s_sum_exact(n, mode);
}

FactorialEstimate factorial_series(std::int64_t n, Summation mode) {
  return make(n, ln_factorial_series(n, mode), FactorialMethod::series_exact);
}

FactorialEstimate factorial_raw(std::int64_t n) {
  require_at_least(n, 2, "factorial_raw");
  const double nd = static_cast<double>(n);
  const double ln_n = ln(n);
  const double ln_value = kRawLogConstant + 0.5 * ln_n + nd * (ln_n - 1.0) -
                          2.0 * (1.0 / nd + 1.0 / (4.0 * nd * nd)) -
                          4.0 * std::log1p(-1.0 / (2.0 * nd));
  return make(n, ln_value, FactorialMethod::raw);
}

FactorialEstimate factorial_corrected(std::int64_t n) {
  require_at_least(n, 2, "factorial_corrected");
  const double nd = static_cast<double>(n);
  const double ln_n = ln(n);
  const double ln_value = 0.5 * (kCorrectedLogConstant + ln_n) + nd * (ln_n - 1.0) -
                          2.0 * (1.0 / nd + kCorrectedQuadratic / (nd * nd)) -
                          4.0 * std::log1p(-kCorrectedShift / nd);
  return make(n, ln_value, FactorialMethod::corrected);
}

FactorialEstimate estimate(std::int64_t n, FactorialMethod method) {
  switch (method) {
    case FactorialMethod::series_exact: return factorial_series(n);
    case FactorialMethod::raw: return factorial_raw(n);
    case FactorialMethod::corrected: return factorial_corrected(n);
  }
  fail(ErrorKind::domain, "unknown factorial method");
}

}  // namespace harmlog::factorial
