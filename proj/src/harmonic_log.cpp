#include "harmlog/harmonic_log.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include <fmt/format.h>

#include "harmlog/error.hpp"

namespace harmlog::harmonic {
namespace {

std::int64_t checked_product(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    fail(ErrorKind::overflow, fmt::format("index product {}·{} overflows 64 bits", a, b));
  }
  return out;
}

void require_range(std::int64_t a, std::int64_t b, std::int64_t min_a, std::string_view what) {
  if (a < min_a) fail(ErrorKind::domain, fmt::format("{}: first index {} < {}", what, a, min_a));
  if (b < a - 1) fail(ErrorKind::domain, fmt::format("{}: range [{}, {}] is reversed", what, a, b));
}

// 2·(harmonic [+ correction]) over indices lo+1..hi, lo <= hi.
double span_log(std::int64_t lo, std::int64_t hi, LogVariant variant, Summation mode) {
  const double h = odd_harmonic_sum(lo + 1, hi, mode);
  if (variant == LogVariant::truncated) return 2.0 * h;
  return 2.0 * h + 2.0 * correction_sum(lo + 1, hi, mode);
}

void require_positive(std::int64_t x, std::string_view what) {
  if (x <= 0) fail(ErrorKind::domain, fmt::format("{} must be a positive integer, got {}", what, x));
}

}  // namespace

std::string_view to_string(LogVariant v) noexcept {
  return v == LogVariant::full ? "full" : "truncated";
}

double odd_harmonic_sum(std::int64_t a, std::int64_t b, Summation mode) {
  require_range(a, b, 1, "odd_harmonic_sum");
  return sum_descending(
      a, b, [](std::int64_t k) { return 1.0 / (2.0 * static_cast<double>(k) - 1.0); }, mode);
}

double correction_sum(std::int64_t a, std::int64_t b, Summation mode) {
  require_range(a, b, 2, "correction_sum");
  return sum_descending(
      a, b,
      [](std::int64_t k) {
        const double kd = static_cast<double>(k);
        const double odd = 2.0 * kd - 1.0;
        return 1.0 / (kd * kd * kd * odd * odd);
      },
      mode);
}

OddHarmonicRange OddHarmonicRange::make(std::int64_t a, std::int64_t b, Summation mode) {
  return {a, b, odd_harmonic_sum(a, b, mode), harmonic::correction_sum(a, b, mode)};
}

double ln_integer(std::int64_t n, LogVariant variant, Summation mode) {
  require_positive(n, "ln_integer argument");
  return span_log(1, n, variant, mode);
}

double exp_form(std::int64_t n, Summation mode) {
  return std::exp(ln_integer(n, LogVariant::full, mode));
}

double ln_product(std::int64_t x, std::int64_t y, LogVariant variant, Summation mode) {
  require_positive(x, "ln_product x");
  require_positive(y, "ln_product y");
  const std::int64_t lo = std::min(x, y);
  const std::int64_t hi = std::max(x, y);
  const double shared = odd_harmonic_sum(2, lo, mode);
  const double tail = odd_harmonic_sum(lo + 1, hi, mode);
  const double h = 4.0 * shared + 2.0 * tail;
  if (variant == LogVariant::truncated) return h;
  const double c = 4.0 * correction_sum(2, lo, mode) + 2.0 * correction_sum(lo + 1, hi, mode);
  return h + c;
}

double ln_quotient(std::int64_t x, std::int64_t y, LogVariant variant, Summation mode) {
  require_positive(x, "ln_quotient x");
  require_positive(y, "ln_quotient y");
  if (x == y) return 0.0;
  if (x > y) return span_log(y, x, variant, mode);
  return -span_log(x, y, variant, mode);
}

std::int64_t ScaledRational::scaled_p() const { return checked_product(m, p); }
std::int64_t ScaledRational::scaled_q() const { return checked_product(m, q); }

double ln_rational(const ScaledRational& r, LogVariant variant, Summation mode) {
  if (r.p == 0 || r.q == 0) {
    fail(ErrorKind::zero_or_infinite, "no logarithm in real quantities for 0 or infinity");
  }
  if (r.p < 0 || r.q < 0) fail(ErrorKind::domain, "ln_rational expects positive p and q");
  if (r.m < 1) fail(ErrorKind::domain, fmt::format("multiplier must be >= 1, got {}", r.m));
  return ln_quotient(r.scaled_p(), r.scaled_q(), variant, mode);
}

std::int64_t auto_multiplier(std::int64_t p, std::int64_t q, std::int64_t threshold) {
  require_positive(p, "p");
  require_positive(q, "q");
  if (threshold < 1) fail(ErrorKind::domain, fmt::format("threshold must be >= 1, got {}", threshold));
  return threshold / std::min(p, q) + 1;
}

namespace {

std::pair<std::int64_t, std::int64_t> normalise_signs(std::int64_t p, std::int64_t q) {
  if (p == 0 || q == 0) {
    fail(ErrorKind::zero_or_infinite, "no logarithm in real quantities for 0 or infinity");
  }
  if ((p < 0) != (q < 0)) {
    fail(ErrorKind::negative_input, "no logarithm in real quantities for a negative number");
  }
  if (p < 0) {
    if (p == std::numeric_limits<std::int64_t>::min() ||
        q == std::numeric_limits<std::int64_t>::min()) {
      fail(ErrorKind::overflow, "cannot negate the most negative 64-bit integer");
    }
    p = -p;
    q = -q;
  }
  return {p, q};
}

}  // namespace

AutoLog ln_auto(std::int64_t p, std::int64_t q, std::int64_t threshold, LogVariant variant,
                Summation mode) {
  const auto [pp, qq] = normalise_signs(p, q);
  const std::int64_t m = auto_multiplier(pp, qq, threshold);
  return {pp, qq, m, ln_rational({pp, qq, m}, variant, mode)};
}

AutoLog ln_signed(std::int64_t p, std::int64_t q, std::int64_t m, LogVariant variant,
                  Summation mode) {
  const auto [pp, qq] = normalise_signs(p, q);
  return {pp, qq, m, ln_rational({pp, qq, m}, variant, mode)};
}

ScaledRational rationalize(double x, std::int64_t denominator) {
  if (denominator < 1) {
    fail(ErrorKind::domain, fmt::format("denominator must be >= 1, got {}", denominator));
  }
  const double scaled = std::round(x * static_cast<double>(denominator));
  if (!(std::fabs(scaled) < 9.2e18)) {
    fail(ErrorKind::overflow, fmt::format("{}·{} does not fit in 64 bits", x, denominator));
  }
  return {static_cast<std::int64_t>(scaled), denominator, 1};
}

}  // namespace harmlog::harmonic
