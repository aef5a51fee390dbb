#pragma once

#include <cstdint>
#include <string_view>

#include "harmlog/summation.hpp"

// Logarithms from odd harmonic sums.
//
// The basic identity is ln(n) ≈ 2·Σ_{k=2..n} 1/(2k-1) + 2·Σ_{k=2..n} 1/(k³(2k-1)²).
// Differences of two such expansions give ln(x/y) as a sum over the index
// range y+1..x only, and writing p/q as (m·p)/(m·q) pushes that range to
// large indices where the second (correction) series becomes negligible.
//
// All index arithmetic is 64-bit; products that would overflow raise
// ErrorKind::overflow instead of wrapping.

namespace harmlog::harmonic {

inline constexpr std::int64_t kDefaultThreshold = 150;
/// The coarser threshold that yields errors on the order of 1e-4 percent.
inline constexpr std::int64_t kCoarseThreshold = 100;

enum class LogVariant { full, truncated };

std::string_view to_string(LogVariant v) noexcept;

/// Σ_{k=a..b} 1/(2k-1), smallest terms first. Requires a >= 1, b >= a-1;
/// b = a-1 is the empty range and returns exactly 0.
double odd_harmonic_sum(std::int64_t a, std::int64_t b,
                        Summation mode = Summation::compensated);

/// Σ_{k=a..b} 1/(k³(2k-1)²). Requires a >= 2, b >= a-1.
double correction_sum(std::int64_t a, std::int64_t b,
                      Summation mode = Summation::compensated);

/// Both sums over one index range.
struct OddHarmonicRange {
  std::int64_t a = 2;
  std::int64_t b = 1;
  double harmonic_sum = 0.0;
  double correction_sum = 0.0;

  static OddHarmonicRange make(std::int64_t a, std::int64_t b,
                               Summation mode = Summation::compensated);

  bool empty() const noexcept { return b < a; }
};

/// ln(n) ≈ 2·odd_harmonic_sum(2, n) [+ 2·correction_sum(2, n)]. ln_integer(1) = 0.
double ln_integer(std::int64_t n, LogVariant variant,
                  Summation mode = Summation::compensated);

/// e^ln_integer(n, full): the exponential reconstruction of n.
double exp_form(std::int64_t n, Summation mode = Summation::compensated);

/// ln(x) + ln(y) via the regrouped form: 4× the shared prefix 2..min(x,y)
/// plus 2× the suffix min+1..max.
double ln_product(std::int64_t x, std::int64_t y, LogVariant variant,
                  Summation mode = Summation::compensated);

/// ln(x) - ln(y) from the sums over min+1..max, signed. Antisymmetric by
/// construction: ln_quotient(x, y) == -ln_quotient(y, x) bit for bit.
double ln_quotient(std::int64_t x, std::int64_t y, LogVariant variant,
                   Summation mode = Summation::compensated);

/// p/q carried as (m·p)/(m·q). Not reduced by gcd.
struct ScaledRational {
  std::int64_t p = 1;
  std::int64_t q = 1;
  std::int64_t m = 1;

  /// Throws ErrorKind::overflow when m·p does not fit in 64 bits.
  std::int64_t scaled_p() const;
  std::int64_t scaled_q() const;
};

/// ln(p/q) ≈ ln_quotient(m·p, m·q). p = 0 or q = 0 is ErrorKind::zero_or_infinite;
/// negative components are ErrorKind::domain.
double ln_rational(const ScaledRational& r, LogVariant variant,
                   Summation mode = Summation::compensated);

/// Smallest m with min(m·p, m·q) > threshold, for positive p and q.
std::int64_t auto_multiplier(std::int64_t p, std::int64_t q,
                             std::int64_t threshold = kDefaultThreshold);

struct AutoLog {
  std::int64_t p = 1;  // sign-normalised inputs
  std::int64_t q = 1;
  std::int64_t m = 1;
  double value = 0.0;
};

/// The full procedure for an arbitrary integer pair: reject p/q <= 0
/// (ErrorKind::negative_input, ErrorKind::zero_or_infinite), normalise the
/// signs, choose m by auto_multiplier, and evaluate ln_rational.
AutoLog ln_auto(std::int64_t p, std::int64_t q, std::int64_t threshold = kDefaultThreshold,
                LogVariant variant = LogVariant::truncated,
                Summation mode = Summation::compensated);

/// Same sign handling as ln_auto, with a caller-chosen multiplier.
AutoLog ln_signed(std::int64_t p, std::int64_t q, std::int64_t m,
                  LogVariant variant = LogVariant::truncated,
                  Summation mode = Summation::compensated);

/// Turns a real x into (round(x·denominator), denominator) with m = 1,
/// e.g. rationalize(1.37, 100) = 137/100.
ScaledRational rationalize(double x, std::int64_t denominator);

}  // namespace harmlog::harmonic
