#pragma once

#include <string_view>

#include "chpi/polygon.hpp"
#include "chpi/realnum.hpp"

namespace chpi {

enum class ApproximantId {
  ch,             // (n/30){32 sin x + 4 tan x - 3 sin 2x}, x = pi/n
  heron,          // (4 pi_2n - pi_n)/3, a lower bound
  snell_huygens,  // (2 pi_n + Pi_n)/3, an upper bound
  area_combo,     // (2 a_n + A_n)/3
  cf1,            // (2 + cos x)/3
  cf2,            // (9 + 6 cos x)/(14 + cos x)
  cf3,            // (51 + 48 cos x + 6 cos^2 x)/(80 + 25 cos x)
  ch_rational,    // 15 cos x/(2 + 16 cos x - 3 cos^2 x)
};

std::string_view to_string(ApproximantId id);

/// True for the rational-in-cos approximants of sin(x)/x.
bool is_sinc_approximant(ApproximantId id);

/// f(x) = pi/(30x) (32 sin x + 4 tan x - 3 sin 2x), with f(0) = pi.
/// Domain 0 <= x < pi/2.
Real f_eval(const Real& x, const PrecisionContext& ctx);

/// f(pi/n), with pi/n formed at work_bits. Bit-identical to
/// f_eval(reference_pi(ctx) / n, ctx).
Real ch_approx(SideCount n, const PrecisionContext& ctx);

/// (1/30){32 pi_n + 4 Pi_2n - 6 a_n} from the polygon quantities, taken
/// literally. This is pi (1 - x^2/30 + ...), not ch_approx.
Real ch_combination(SideCount n, const PrecisionContext& ctx);

Real heron_lower(SideCount n, const PrecisionContext& ctx);
Real snell_huygens(SideCount n, const PrecisionContext& ctx);

/// (2/3) a_n + (1/3) A_n. Its error against pi is O(x^2).
Real area_combination(SideCount n, const PrecisionContext& ctx);
/// (1/3) a_n + (2/3) A_n. Its error is (2/15) pi x^4 + ..., the same order
/// as the Snell-Huygens combination.
Real area_combination_dual(SideCount n, const PrecisionContext& ctx);

/// (snell_huygens - pi) / (area_combination_dual - pi), tending to 3/8.
/// Throws "ratio indeterminate at this precision" when the denominator falls
/// below 2^-(work_bits - 8).
Real ratio_limit(SideCount n, const PrecisionContext& ctx);

/// Rational approximation of sin(x)/x for 0 <= x <= pi/4.
Real sinc_approx(ApproximantId id, const Real& x, const PrecisionContext& ctx);

/// Continued fraction of sin(x)/x in u = sin^2(x/2), truncated after `depth`
/// partial numerators (1 <= depth <= 4) and evaluated bottom-up.
Real sinc_continued_fraction(const Real& x, int depth, const PrecisionContext& ctx);

struct ErrorConstant {
  int order = 0;
  Real constant;
};

/// Leading term of sinc_approx(id, x) - sin(x)/x ~ constant * x^order.
///
/// Samples x = 2^-k for k = 8..16, reads the order off successive error
/// ratios, then Richardson-extrapolates err/x^order in powers of x^2.
/// Throws "extrapolation failed" when the ratios do not settle on one order.
ErrorConstant sinc_error_constant(ApproximantId id, const PrecisionContext& ctx);

/// Any approximant as an approximation of pi at side count n. The sinc
/// approximants s map to n sin(pi/n) / s(pi/n), so ch_rational reproduces ch.
Real pi_approximant(ApproximantId id, SideCount n, const PrecisionContext& ctx);

struct ApproxReport {
  ApproximantId id = ApproximantId::ch;
  Real n_or_x;
  Real value;
  Real abs_error;
  Real rel_error;
  int precision = 0;
  int sig_digits = 0;
};

ApproxReport evaluate(ApproximantId id, SideCount n, const PrecisionContext& ctx);

/// (value - pi) / pi, signed.
Real signed_relative_error(const Real& value, const PrecisionContext& ctx);

}  // namespace chpi
