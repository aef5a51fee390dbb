#pragma once

// Straightforward second implementations used to cross-check the library:
// long double brute-force sums, smallest terms first, and n! as a running
// product in linear space.

#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>

namespace testsupport {

inline long double odd_harmonic_ld(std::int64_t a, std::int64_t b) {
  long double s = 0.0L;
  for (std::int64_t k = b; k >= a; --k) s += 1.0L / (2.0L * k - 1.0L);
  return s;
}

inline long double correction_ld(std::int64_t a, std::int64_t b) {
  long double s = 0.0L;
  for (std::int64_t k = b; k >= a; --k) {
    const long double kd = k;
    const long double odd = 2.0L * kd - 1.0L;
    s += 1.0L / (kd * kd * kd * odd * odd);
  }
  return s;
}

/// n! by repeated multiplication; exact through 22!, correctly rounded-ish
/// beyond, +inf past 170!.
inline double factorial_product(std::int64_t n) {
  double p = 1.0;
  for (std::int64_t k = 2; k <= n; ++k) p *= static_cast<double>(k);
  return p;
}

inline std::uint64_t bits(double x) {
  std::uint64_t u;
  std::memcpy(&u, &x, sizeof u);
  return u;
}

/// Distance in units of the last place between two finite doubles.
inline std::uint64_t ulp_distance(double a, double b) {
  auto ordered = [](double x) {
    const std::int64_t i = static_cast<std::int64_t>(bits(x));
    return i < 0 ? std::numeric_limits<std::int64_t>::min() - i : i;
  };
  const std::int64_t ia = ordered(a);
  const std::int64_t ib = ordered(b);
  return ia > ib ? static_cast<std::uint64_t>(ia - ib) : static_cast<std::uint64_t>(ib - ia);
}

}  // namespace testsupport
