#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

// Exponential forms of a number x and of the consecutive-number ratio
// x/(x-1). Every function rejects the points where its formula degenerates
// with ErrorKind::domain; a result that leaves binary64 range is reported
// as ErrorKind::overflow.

namespace harmlog::cnr {

inline constexpr std::int64_t kDefaultScale = 100;

enum class CnrTag { lemma11, pow2, exp_full, exp_scaled, exp_large };

struct CnrMethod {
  CnrTag tag = CnrTag::exp_full;
  std::int64_t m = 1;  // only meaningful for exp_scaled; must be >= 1

  static CnrMethod scaled(std::int64_t m);
};

std::string_view to_string(CnrTag tag) noexcept;

struct ApproxValue {
  double input = 0.0;
  CnrMethod method;
  double value = 0.0;
  double reference = 0.0;
  double percent_error = 0.0;  // signed, against `reference`
};

/// (x - 1)·2^(1/(x-1)); zero at x = 1, which is rejected.
double approx_lemma11(double x);

/// 2^(3/(2x-1)) as an estimate of x/(x-1).
double approx_cnr_pow2(double x);

/// (x - 1)·e^(2/(2x - 1 - 1/x³)), for positive or negative x.
double approx_number_exp(double x);

/// (x - 1/m)·e^(2/(2mx - 1 - 1/(mx)³)). With m = 1 this is bit-identical to
/// approx_number_exp.
double approx_number_scaled(double x, std::int64_t m = kDefaultScale);

/// (x - 1)·e^(2/(2x-1)); the large-|x| form where 1/x³ is dropped.
double approx_number_large(double x);

/// e^(2/(2x - 1 - 1/x³)), the ratio estimate behind approx_number_exp.
double cnr_exp(double x);

/// 2/(2x - 1 - 1/x³), i.e. ln(cnr_exp(x)) without the round trip.
double log_cnr_exp(double x);

/// Evaluates `method` at x. The reference is x itself, except for pow2,
/// which estimates the ratio x/(x-1).
ApproxValue evaluate(double x, CnrMethod method);

struct Ratio {
  std::int64_t num;
  std::int64_t den;

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

/// The n-1 building blocks 2/1, 3/2, ..., n/(n-1) whose product is n.
std::vector<Ratio> nbb_decompose(std::int64_t n);

}  // namespace harmlog::cnr
