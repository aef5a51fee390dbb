#pragma once

#include <cstdint>
#include <string_view>

#include "harmlog/summation.hpp"

// The Number Constant N_r and the Euler–Mascheroni estimate 2 - 2·ln 2 - N_r.
//
// N_r has three inequivalent definitions: the integral closed form
// (0.0400747...), the direct series 2·Σ 1/(k³(2k-1)²) (→ 0.0317305...), and
// the limit of ln n - 2·Σ_{k=2..n} 1/(2k-1) (→ 0.0364900...). Each is kept as
// its own variant; none is treated as canonical.

namespace harmlog::constants {

/// Euler–Mascheroni constant to 12 decimals, the comparison value.
inline constexpr double kEulerGamma = 0.577215664901;
/// Evaluation of the integral at its bounds.
inline constexpr double kIntegralBoundTerm = 16.67560703904;
/// Tail tolerance for the converged direct series.
inline constexpr double kDirectSeriesTailTolerance = 1e-12;

enum class NrTag { integral_closed_form, direct_series, empirical_limit };

std::string_view to_string(NrTag tag) noexcept;

struct NrVariant {
  NrTag tag = NrTag::integral_closed_form;
  std::int64_t parameter = 0;  // term count or n; 0 for the closed form
  double value = 0.0;
};

/// -24·ln 2 + 16.67560703904.
double nr_integral();

/// 2·Σ_{k=2..terms+1} 1/(k³(2k-1)²). terms >= 1.
double nr_direct_series(std::int64_t terms, Summation mode = Summation::compensated);

/// Upper bound on the series tail beyond `terms` terms:
/// Σ_{k>N} 2/(k³(2k-1)²) <= 1/(8N⁴(1 - 1/(2N))²) with N = terms + 1.
double direct_series_tail_bound(std::int64_t terms);

/// Smallest term count whose tail bound is below `tolerance`.
std::int64_t direct_series_terms_for(double tolerance);

/// ln n - 2·odd_harmonic_sum(2, n) with the oracle logarithm. n >= 2.
double nr_empirical_limit(std::int64_t n, Summation mode = Summation::compensated);

NrVariant integral_variant();
NrVariant direct_series_variant(std::int64_t terms);
NrVariant converged_direct_series_variant();
NrVariant empirical_limit_variant(std::int64_t n);

/// 2 - 2·ln 2 - N_r.
double euler_gamma(const NrVariant& variant);

/// Σ_{x=1..p} 1/x - ln p, compensated. p >= 1.
double gamma_definition_check(std::int64_t p, Summation mode = Summation::compensated);

}  // namespace harmlog::constants
