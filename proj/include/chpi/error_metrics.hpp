#pragma once

#include <optional>

#include "chpi/polygon.hpp"
#include "chpi/realnum.hpp"

namespace chpi {

// Two accuracy scales for an approximation alpha of pi. Both are defined by
// strict inequalities, so an error of exactly 10^-n resolves to n - 1.
//
//   precision          largest n with |alpha - pi| < 10^-n
//   significant digits largest n with |alpha - pi| / pi < (1/2) 10^-n
//
// precision n implies n significant digits, because 1/pi < 1/2. Errors are
// measured against Machin pi at work_bits + guard_bits.

struct AccuracyReport {
  Real value;
  Real abs_error;
  Real rel_error;
  int precision = 0;
  int sig_digits = 0;
  std::optional<Real> digits_estimate;
};

/// Throws "increase precision" when |alpha - pi| <= 2^-(work_bits - 8).
int precision_of(const Real& alpha, const PrecisionContext& ctx);
int significant_digits(const Real& alpha, const PrecisionContext& ctx);

/// 6 log10(n) - 1.27, defined for n >= 32.
Real digits_estimate(SideCount n, const PrecisionContext& ctx = default_context());

AccuracyReport report(const Real& alpha, std::optional<SideCount> n_for_estimate, const PrecisionContext& ctx);

/// 10^k at `bits`.
Real power_of_ten(long k, long bits);

}  // namespace chpi
