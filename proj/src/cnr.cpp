#include "harmlog/cnr.hpp"

#include <cmath>

#include <fmt/format.h>

#include "harmlog/error.hpp"
#include "harmlog/oracle.hpp"

namespace harmlog::cnr {
namespace {

double checked(double value, double x, std::string_view what) {
  if (!std::isfinite(value)) {
    fail(ErrorKind::overflow, fmt::format("{} at x = {} is not representable", what, x));
  }
  return value;
}

// Shared by approx_number_exp and approx_number_scaled so that m = 1 takes
// the identical instruction path.
double scaled_kernel(double x, std::int64_t m) {
  if (x == 0.0) fail(ErrorKind::domain, "exponential form undefined at x = 0");
  const double md = static_cast<double>(m);
  const double mx = md * x;
  const double denom = 2.0 * mx - 1.0 - 1.0 / (mx * mx * mx);
  if (denom == 0.0) {
    fail(ErrorKind::domain,
         fmt::format("exponent denominator vanishes at x = {}, m = {}", x, m));
  }
  return checked((x - 1.0 / md) * std::exp(2.0 / denom), x, "exponential form");
}

}  // namespace

CnrMethod CnrMethod::scaled(std::int64_t m) {
  if (m < 1) fail(ErrorKind::domain, fmt::format("scale multiplier must be >= 1, got {}", m));
  return {CnrTag::exp_scaled, m};
}

std::string_view to_string(CnrTag tag) noexcept {
  switch (tag) {
    case CnrTag::lemma11: return "lemma11";
    case CnrTag::pow2: return "pow2";
    case CnrTag::exp_full: return "exp";
    case CnrTag::exp_scaled: return "scaled";
    case CnrTag::exp_large: return "large";
  }
  return "unknown";
}

double approx_lemma11(double x) {
  if (x == 1.0) fail(ErrorKind::domain, "(x-1)·2^(1/(x-1)) degenerates to 0 at x = 1");
  return checked((x - 1.0) * std::exp2(1.0 / (x - 1.0)), x, "lemma 1.1 form");
}

double approx_cnr_pow2(double x) {
  if (2.0 * x - 1.0 == 0.0) fail(ErrorKind::domain, "2^(3/(2x-1)) undefined at x = 1/2");
  return checked(std::exp2(3.0 / (2.0 * x - 1.0)), x, "power-of-two ratio");
}

double approx_number_exp(double x) {
  if (x == 1.0) fail(ErrorKind::domain, "exponential form degenerates at x = 1");
  return scaled_kernel(x, 1);
}

double approx_number_scaled(double x, std::int64_t m) {
  if (m < 1) fail(ErrorKind::domain, fmt::format("scale multiplier must be >= 1, got {}", m));
  if (m == 1 && x == 1.0) fail(ErrorKind::domain, "exponential form degenerates at x = 1");
  return scaled_kernel(x, m);
}

double approx_number_large(double x) {
  if (2.0 * x - 1.0 == 0.0) fail(ErrorKind::domain, "e^(2/(2x-1)) undefined at x = 1/2");
  return checked((x - 1.0) * std::exp(2.0 / (2.0 * x - 1.0)), x, "large-x form");
}

double log_cnr_exp(double x) {
  if (x == 0.0) fail(ErrorKind::domain, "ratio form undefined at x = 0");
  const double denom = 2.0 * x - 1.0 - 1.0 / (x * x * x);
  if (denom == 0.0) {
    fail(ErrorKind::domain, fmt::format("ratio x/(x-1) is singular at x = {}", x));
  }
  return 2.0 / denom;
}

double cnr_exp(double x) { return checked(std::exp(log_cnr_exp(x)), x, "ratio form"); }

ApproxValue evaluate(double x, CnrMethod method) {
  ApproxValue out{x, method, 0.0, x, 0.0};
  switch (method.tag) {
    case CnrTag::lemma11: out.value = approx_lemma11(x); break;
    case CnrTag::pow2:
      out.value = approx_cnr_pow2(x);
      if (x == 1.0) fail(ErrorKind::domain, "ratio x/(x-1) is singular at x = 1");
      out.reference = x / (x - 1.0);
      break;
    case CnrTag::exp_full: out.value = approx_number_exp(x); break;
    case CnrTag::exp_scaled: out.value = approx_number_scaled(x, method.m); break;
    case CnrTag::exp_large: out.value = approx_number_large(x); break;
  }
  out.percent_error = oracle::percent_error(out.value, out.reference);
  return out;
}

std::vector<Ratio> nbb_decompose(std::int64_t n) {
  if (n < 2) fail(ErrorKind::domain, fmt::format("building blocks need n >= 2, got {}", n));
  std::vector<Ratio> blocks;
  blocks.reserve(static_cast<std::size_t>(n - 1));
  for (std::int64_t k = 2; k <= n; ++k) blocks.push_back({k, k - 1});
  return blocks;
}

}  // namespace harmlog::cnr
