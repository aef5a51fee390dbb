#include "harmlog/constants.hpp"

#include <cmath>

#include <fmt/format.h>

#include "harmlog/error.hpp"
#include "harmlog/harmonic_log.hpp"
#include "harmlog/oracle.hpp"

namespace harmlog::constants {

std::string_view to_string(NrTag tag) noexcept {
  switch (tag) {
    case NrTag::integral_closed_form: return "integral";
    case NrTag::direct_series: return "series";
    case NrTag::empirical_limit: return "limit";
  }
  return "unknown";
}

double nr_integral() { return -24.0 * oracle::ln2() + kIntegralBoundTerm; }

double nr_direct_series(std::int64_t terms, Summation mode) {
  if (terms < 1) fail(ErrorKind::domain, fmt::format("need at least one term, got {}", terms));
  return 2.0 * harmonic::correction_sum(2, terms + 1, mode);
}

double direct_series_tail_bound(std::int64_t terms) {
  if (terms < 1) fail(ErrorKind::domain, fmt::format("need at least one term, got {}", terms));
  const double n = static_cast<double>(terms + 1);
  const double shrink = 1.0 - 1.0 / (2.0 * n);
  return 1.0 / (8.0 * n * n * n * n * shrink * shrink);
}

std::int64_t direct_series_terms_for(double tolerance) {
  if (!(tolerance > 0.0)) fail(ErrorKind::domain, "tail tolerance must be positive");
  std::int64_t terms = 1;
  while (direct_series_tail_bound(terms) >= tolerance) terms *= 2;
  std::int64_t lo = terms / 2;
  while (lo + 1 < terms) {
    const std::int64_t mid = lo + (terms - lo) / 2;
    if (direct_series_tail_bound(mid) < tolerance) {
      terms = mid;
    } else {
      lo = mid;
    }
  }
  return terms;
}

double nr_empirical_limit(std::int64_t n, Summation mode) {
  if (n < 2) fail(ErrorKind::domain, fmt::format("empirical limit needs n >= 2, got {}", n));
  return oracle::ln_ref(static_cast<double>(n)).value - 2.0 * harmonic::odd_harmonic_sum(2, n, mode);
}

NrVariant integral_variant() { return {NrTag::integral_closed_form, 0, nr_integral()}; }

NrVariant direct_series_variant(std::int64_t terms) {
  return {NrTag::direct_series, terms, nr_direct_series(terms)};
}

NrVariant converged_direct_series_variant() {
  return direct_series_variant(direct_series_terms_for(kDirectSeriesTailTolerance));
}

NrVariant empirical_limit_variant(std::int64_t n) {
  return {NrTag::empirical_limit, n, nr_empirical_limit(n)};
}

double euler_gamma(const NrVariant& variant) {
  return 2.0 - 2.0 * oracle::ln2() - variant.value;
}

double gamma_definition_check(std::int64_t p, Summation mode) {
  if (p < 1) fail(ErrorKind::domain, fmt::format("need p >= 1, got {}", p));
  const double harmonic_number = sum_descending(
      1, p, [](std::int64_t k) { return 1.0 / static_cast<double>(k); }, mode);
  return harmonic_number - oracle::ln_ref(static_cast<double>(p)).value;
}

}  // namespace harmlog::constants
