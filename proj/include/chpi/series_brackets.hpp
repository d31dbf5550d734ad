#pragma once

#include <span>
#include <utility>
#include <vector>

#include "chpi/bracket.hpp"
#include "chpi/kernels.hpp"
#include "chpi/polygon.hpp"
#include "chpi/realnum.hpp"

namespace chpi {

// Certified enclosures built from truncated Maclaurin series, and the
// two-sided relative-error bound for the CH approximant derived from them:
//
//   (pi/n)^6 / 105 < (Pi(n) - pi) / pi < (pi/n)^6 / 104.7,   n >= 32.

/// sin x in [S7(x), S7(x) + x^9/9!], x >= 0, where S7 is the alternating
/// partial sum through x^7. The upper endpoint is held exactly, so the width
/// is x^9/9! at work_bits bit-for-bit.
Bracket sin_bracket(const Real& x, const PrecisionContext& ctx);

/// tan x in [T9(x), T9(x) + x^11/85] for 0 <= x <= pi/32, where
/// T9 = x + x^3/3 + 2x^5/15 + 17x^7/315 + 62x^9/2835. Throws
/// "lemma domain exceeded" outside that interval.
Bracket tan_bracket(const Real& x, const PrecisionContext& ctx);

/// Eleventh derivative of tan at t, written as a polynomial in tan t:
/// 256 (T^2+1)(155925 T^10 + 467775 T^8 + 509355 T^6 + 238425 T^4 + 42306 T^2 + 1382).
/// Domain 0 <= t <= pi/32, on which it increases from 353792.
Real tan_deriv11(const Real& t, const PrecisionContext& ctx);

/// sin 2x in [S9(2x) - (2x)^11/11!, S9(2x)], x >= 0.
Bracket sin2x_bracket(const Real& x, const PrecisionContext& ctx);

/// Enclosure of f(x)/pi - 1 for 0 < x <= pi/32, composed from the three
/// brackets above as 32 [sin] + 4 [tan] - 3 [sin 2x], divided by 30x. In
/// closed form the endpoints are
///   x^6/105 + 118/42525 x^8                         (lower)
///   x^6/105 + x^8/360 + 20858/13253625 x^10         (upper)
Bracket relerr_bracket(const Real& x, const PrecisionContext& ctx);

/// The polynomial pair as it is usually quoted,
///   x^6/105 + x^8/360 + 2776/2338875 x^10  and  x^6/105 + x^8/360 + 10531/26507250 x^10.
/// Not an enclosure: the second is below f(x)/pi - 1 for every x > 0, and the
/// first rises above it for small x (the true x^10 coefficient is 47/39600).
/// Kept for comparison only.
std::pair<Real, Real> printed_relerr_polynomials(const Real& x, const PrecisionContext& ctx);

/// ((pi/n)^6/105, (pi/n)^6 * 10/1047). Throws
/// "theorem hypothesis n >= 32 violated" for n < 32.
Bracket theorem_bounds(SideCount n, const PrecisionContext& ctx);

struct BoundCheck {
  SideCount n = 0;
  Real rel_error;
  Real lower_bound;
  Real upper_bound;
  /// rel_error - lower_bound and upper_bound - rel_error.
  Real margin_lower;
  Real margin_upper;
  bool passed = false;
};

/// Relative error of ch_approx(n) checked against theorem_bounds(n). Passing
/// requires both strict inequalities to hold after widening rel_error by
/// 4 ulp(pi)/pi at work_bits on each side.
BoundCheck certify_bound(SideCount n, const PrecisionContext& ctx);

/// certify_bound over every n; throws before evaluating anything if some n < 32.
std::vector<BoundCheck> certify_theorem(std::span<const SideCount> n_values, const PrecisionContext& ctx,
                                        Execution exec = Execution::parallel);

/// 105 * rel_error(n) * (n/pi)^6. Tends to 1 from above.
Real best_constant_probe(SideCount n, const PrecisionContext& ctx);

/// `points` values (pi/32) * 2^(-16 i/(points-1)), i = 0..points-1, largest first.
std::vector<Real> geometric_grid(int points, const PrecisionContext& ctx);

struct GridCheck {
  Real x;
  bool sin_inside = false;
  bool tan_inside = false;
  bool sin2x_inside = false;
  bool relerr_inside = false;

  [[nodiscard]] bool all() const { return sin_inside && tan_inside && sin2x_inside && relerr_inside; }
};

/// Facade sin x, tan x, sin 2x and f(x)/pi - 1 tested against their brackets
/// (strict containment after 4-ulp outward inflation).
GridCheck check_grid_point(const Real& x, const PrecisionContext& ctx);

std::vector<GridCheck> check_lemma_grid(std::span<const Real> xs, const PrecisionContext& ctx,
                                        Execution exec = Execution::parallel);

}  // namespace chpi
