#pragma once

#include <cstdint>

// Reference values used to judge every approximation in the library. The
// routes here (artanh series, exact big-integer factorials) share nothing
// with the odd-harmonic machinery they are used to check.

namespace harmlog::oracle {

struct ReferenceValue {
  double value = 0.0;
  /// Bound on |value - exact|; see each producer for how it is derived.
  double guaranteed_abs_error = 0.0;
};

/// ln(x) from 2·artanh((f-1)/(f+1)) after reducing x = 2^e·f with
/// f in [1/√2, √2). The series is summed until the remaining tail is
/// below 1e-17·|partial sum|.
double ln_artanh_series(double x);

/// ln 2 from the artanh series at z = 1/3.
double ln2();

/// Platform logarithm, cross-checked against ln_artanh_series. Throws
/// ErrorKind::integrity if the two disagree by more than 1e-13 relative,
/// ErrorKind::domain for x <= 0 or non-finite x. The error bound is the
/// observed disagreement plus one ulp of the result.
ReferenceValue ln_ref(double x);

/// ln(n!) from the exact big-integer product.
double factorial_ln_bigint(std::int64_t n);

/// ln(n!) as a compensated sum of ln_ref(j), j = 2..n.
double factorial_ln_sum(std::int64_t n);

/// ln(n!). Exact big-integer route for n <= kBigintFactorialLimit, the
/// summed route above it. Error bound: a few ulp of the result for the
/// big-integer route, n·ulp for the summed one.
ReferenceValue factorial_exact_ln(std::int64_t n);

/// n! rounded to binary64 (+inf once it overflows).
double factorial_exact(std::int64_t n);

inline constexpr std::int64_t kBigintFactorialLimit = 20000;

/// Signed percentage error, (approx - reference) / |reference| × 100.
/// Throws ErrorKind::domain when reference is 0.
double percent_error(double approx, double reference);

}  // namespace harmlog::oracle
