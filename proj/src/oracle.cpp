#include "harmlog/oracle.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <fmt/format.h>

#include "harmlog/error.hpp"
#include "harmlog/summation.hpp"

namespace harmlog::oracle {
namespace {

using boost::multiprecision::cpp_int;

constexpr double kSqrtHalf = 0.70710678118654752440;
constexpr double kAgreement = 1e-13;

// 2·artanh(z) = 2·(z + z³/3 + z⁵/5 + ...), |z| <= 1/3.
double two_artanh(double z) {
  if (z == 0.0) return 0.0;
  const double z2 = z * z;
  double power = z;
  CompensatedSum s;
  for (int k = 0; k < 200; ++k) {
    const double term = power / static_cast<double>(2 * k + 1);
    s.add(term);
    // remaining tail < |term|·z²/(1-z²)
    if (std::fabs(term) * z2 / (1.0 - z2) < 1e-17 * std::fabs(s.value())) break;
    power *= z2;
  }
  return 2.0 * s.value();
}

double ulp(double x) {
  const double a = std::fabs(x);
  return std::nextafter(a, std::numeric_limits<double>::infinity()) - a;
}

double ln_of(const cpp_int& v) {
  const unsigned top_bit = boost::multiprecision::msb(v);
  if (top_bit < 63) return ln_ref(static_cast<double>(v.convert_to<std::uint64_t>())).value;
  const unsigned shift = top_bit - 62;
  const auto top = static_cast<std::uint64_t>(v >> shift);
  return ln_ref(static_cast<double>(top)).value + static_cast<double>(shift) * ln2();
}

}  // namespace

double ln2() {
  static const double value = two_artanh(1.0 / 3.0);
  return value;
}

double ln_artanh_series(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    fail(ErrorKind::domain, fmt::format("logarithm undefined for x = {}", x));
  }
  int exponent = 0;
  double f = std::frexp(x, &exponent);  // f in [0.5, 1)
  if (f < kSqrtHalf) {
    f *= 2.0;
    --exponent;
  }
  const double reduced = two_artanh((f - 1.0) / (f + 1.0));
  return static_cast<double>(exponent) * ln2() + reduced;
}

ReferenceValue ln_ref(double x) {
  const double series = ln_artanh_series(x);
  const double platform = std::log(x);
  const double gap = std::fabs(platform - series);
  if (gap > kAgreement * std::fabs(platform)) {
    fail(ErrorKind::integrity,
         fmt::format("ln({}) routes disagree: platform {:.17g}, series {:.17g}", x,
                     platform, series));
  }
  return {platform, gap + ulp(platform)};
}

double factorial_ln_bigint(std::int64_t n) {
  if (n < 0) fail(ErrorKind::domain, "factorial of a negative integer");
  if (n < 2) return 0.0;
  cpp_int product = 1;
  for (std::int64_t k = 2; k <= n; ++k) product *= k;
  return ln_of(product);
}

double factorial_ln_sum(std::int64_t n) {
  if (n < 0) fail(ErrorKind::domain, "factorial of a negative integer");
  CompensatedSum s;
  for (std::int64_t k = 2; k <= n; ++k) s.add(ln_ref(static_cast<double>(k)).value);
  return s.value();
}

ReferenceValue factorial_exact_ln(std::int64_t n) {
  if (n <= kBigintFactorialLimit) {
    const double v = factorial_ln_bigint(n);
    return {v, 4.0 * ulp(v)};
  }
  const double v = factorial_ln_sum(n);
  return {v, static_cast<double>(n) * ulp(v)};
}

double factorial_exact(std::int64_t n) {
  if (n < 0) fail(ErrorKind::domain, "factorial of a negative integer");
  if (n > 170) return std::numeric_limits<double>::infinity();
  cpp_int product = 1;
  for (std::int64_t k = 2; k <= n; ++k) product *= k;
  return product.convert_to<double>();
}

double percent_error(double approx, double reference) {
  if (reference == 0.0) fail(ErrorKind::domain, "percent error against a zero reference");
  return (approx - reference) / std::fabs(reference) * 100.0;
}

}  // namespace harmlog::oracle
