#include "chpi/series_brackets.hpp"

#include <algorithm>
#include <cstdlib>

#include "chpi/approximants.hpp"

namespace chpi {

namespace {

// a + b with enough precision that no rounding happens.
Real exact_sum(const Real& a, const Real& b) {
  if (a.is_zero()) {
    return b;
  }
  if (b.is_zero()) {
    return a;
  }
  const long span = std::labs(a.exponent() - b.exponent());
  const long bits = std::max<long>(a.bits(), b.bits()) + span + 2;
  return a.at(bits) + b.at(bits);
}

// y - y^3/3! + y^5/5! - ... through y^last_power.
Real sin_partial_sum(const Real& y, int last_power) {
  const Real y2 = y * y;
  Real term = y;
  Real sum = y;
  for (long k = 3; k <= last_power; k += 2) {
    term = -(term * y2 / ((k - 1) * k));
    sum += term;
  }
  return sum;
}

Real tan_partial_sum(const Real& y) {
  const Real y2 = y * y;
  const Real y3 = y * y2;
  const Real y5 = y3 * y2;
  const Real y7 = y5 * y2;
  const Real y9 = y7 * y2;
  return y + y3 / 3 + y5 * 2 / 15 + y7 * 17 / 315 + y9 * 62 / 2835;
}

Real pi_over_32(long bits) { return ldexp(machin_pi(bits), -5); }

void require_non_negative(const Real& x) {
  if (x.sign() < 0) {
    throw Error("negative argument");
  }
}

void require_lemma_domain(const Real& x, const PrecisionContext& ctx) {
  if (x.sign() < 0 || x > pi_over_32(ctx.internal_bits()).at(x.bits())) {
    throw Error("lemma domain exceeded");
  }
}

Real inner(const Real& x, const PrecisionContext& ctx) { return x.at(std::max<long>(ctx.internal_bits(), x.bits())); }

struct InnerBracket {
  Real lower;
  Real upper;
  Real term;
};

InnerBracket sin_inner(const Real& y) {
  Real lower = sin_partial_sum(y, 7);
  Real term = pow(y, 9) / 362880;
  Real upper = lower + term;
  return {std::move(lower), std::move(upper), std::move(term)};
}

InnerBracket tan_inner(const Real& y) {
  Real lower = tan_partial_sum(y);
  Real term = pow(y, 11) / 85;
  Real upper = lower + term;
  return {std::move(lower), std::move(upper), std::move(term)};
}

InnerBracket sin2x_inner(const Real& y) {
  const Real y2 = ldexp(y, 1);
  Real upper = sin_partial_sum(y2, 9);
  Real term = pow(y2, 11) / 39916800;
  Real lower = upper - term;
  return {std::move(lower), std::move(upper), std::move(term)};
}

}  // namespace

Bracket sin_bracket(const Real& x, const PrecisionContext& ctx) {
  require_non_negative(x);
  const InnerBracket b = sin_inner(inner(x, ctx));
  Real lower = b.lower.at(ctx.work_bits);
  Real upper = exact_sum(lower, b.term.at(ctx.work_bits));
  return Bracket(std::move(lower), std::move(upper));
}

Bracket tan_bracket(const Real& x, const PrecisionContext& ctx) {
  require_lemma_domain(x, ctx);
  const InnerBracket b = tan_inner(inner(x, ctx));
  Real lower = b.lower.at(ctx.work_bits);
  Real upper = exact_sum(lower, b.term.at(ctx.work_bits));
  return Bracket(std::move(lower), std::move(upper));
}

Real tan_deriv11(const Real& t, const PrecisionContext& ctx) {
  require_lemma_domain(t, ctx);
  const Real tn = tan(inner(t, ctx));
  const Real t2 = tn * tn;
  Real poly = t2 * 155925 + 467775;
  for (const long c : {509355L, 238425L, 42306L, 1382L}) {
    poly = poly * t2 + c;
  }
  return ((t2 + 1) * poly * 256).at(ctx.work_bits);
}

Bracket sin2x_bracket(const Real& x, const PrecisionContext& ctx) {
  require_non_negative(x);
  const InnerBracket b = sin2x_inner(inner(x, ctx));
  Real upper = b.upper.at(ctx.work_bits);
  Real lower = exact_sum(upper, -b.term.at(ctx.work_bits));
  return Bracket(std::move(lower), std::move(upper));
}

Bracket relerr_bracket(const Real& x, const PrecisionContext& ctx) {
  if (x.sign() <= 0) {
    throw Error("relative-error bracket requires x > 0");
  }
  require_lemma_domain(x, ctx);
  const Real y = inner(x, ctx);

  const InnerBracket s = sin_inner(y);
  const InnerBracket t = tan_inner(y);
  const InnerBracket s2 = sin2x_inner(y);

  const Bracket combo = Bracket(s.lower, s.upper) * 32 + Bracket(t.lower, t.upper) * 4 +
                        (-Bracket(s2.lower, s2.upper)) * 3;
  const Bracket rel = combo * (Real(1, y.bits()) / (y * 30)) + Real(-1, y.bits());
  return Bracket(rel.lower.at(ctx.work_bits), rel.upper.at(ctx.work_bits));
}

std::pair<Real, Real> printed_relerr_polynomials(const Real& x, const PrecisionContext& ctx) {
  const Real y = inner(x, ctx);
  const Real y2 = y * y;
  const Real y6 = pow(y, 6);
  const Real common = y6 / 105 + y6 * y2 / 360;
  const Real y10 = y6 * y2 * y2;
  const Real first = common + y10 * Real::ratio(2776, 2338875, y.bits());
  const Real second = common + y10 * Real::ratio(10531, 26507250, y.bits());
  return {first.at(ctx.work_bits), second.at(ctx.work_bits)};
}

Bracket theorem_bounds(SideCount n, const PrecisionContext& ctx) {
  if (n < 32) {
    throw Error("theorem hypothesis n >= 32 violated");
  }
  check_side_count(n);
  const long bits = ctx.internal_bits();
  const Real x6 = pow(machin_pi(bits) / n, 6);
  return Bracket((x6 / 105).at(ctx.work_bits), (x6 * 10 / 1047).at(ctx.work_bits));
}

BoundCheck certify_bound(SideCount n, const PrecisionContext& ctx) {
  Bracket bounds = theorem_bounds(n, ctx);
  const Real pi = reference_pi(ctx);
  const Real delta = ulp(pi, ctx.work_bits) * 4 / pi;

  BoundCheck check;
  check.n = n;
  check.rel_error = signed_relative_error(ch_approx(n, ctx), ctx);
  check.margin_lower = check.rel_error - bounds.lower;
  check.margin_upper = bounds.upper - check.rel_error;
  check.passed = bounds.lower < check.rel_error - delta && check.rel_error + delta < bounds.upper;
  check.lower_bound = std::move(bounds.lower);
  check.upper_bound = std::move(bounds.upper);
  return check;
}

std::vector<BoundCheck> certify_theorem(std::span<const SideCount> n_values, const PrecisionContext& ctx,
                                        Execution exec) {
  for (const SideCount n : n_values) {
    if (n < 32) {
      throw Error("theorem hypothesis n >= 32 violated");
    }
  }
  return map_indexed(n_values.size(), exec, [&](std::size_t i) { return certify_bound(n_values[i], ctx); });
}

Real best_constant_probe(SideCount n, const PrecisionContext& ctx) {
  if (n < 32) {
    throw Error("theorem hypothesis n >= 32 violated");
  }
  const long bits = ctx.internal_bits();
  const Real pi = machin_pi(bits);
  const Real rel = (ch_approx(n, ctx).at(bits) - pi) / pi;
  return (rel * 105 * pow(Real(n, bits) / pi, 6)).at(ctx.work_bits);
}

std::vector<Real> geometric_grid(int points, const PrecisionContext& ctx) {
  if (points < 1) {
    throw Error("grid needs at least one point");
  }
  const long bits = ctx.internal_bits();
  const Real top = pi_over_32(bits);
  std::vector<Real> xs;
  xs.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    if (points == 1) {
      xs.push_back(top.at(ctx.work_bits));
      break;
    }
    const Real e = Real(-16L * i, bits) / (points - 1);
    xs.push_back((top * exp2(e)).at(ctx.work_bits));
  }
  return xs;
}

GridCheck check_grid_point(const Real& x, const PrecisionContext& ctx) {
  const long work = ctx.work_bits;
  GridCheck g;
  g.x = x;

  const Real s = trig(TrigFn::sin, x, ctx);
  g.sin_inside = certified_inside(s, sin_bracket(x, ctx), s, work);

  const Real t = trig(TrigFn::tan, x, ctx);
  g.tan_inside = certified_inside(t, tan_bracket(x, ctx), t, work);

  const Real s2 = trig(TrigFn::sin, ldexp(x, 1), ctx);
  g.sin2x_inside = certified_inside(s2, sin2x_bracket(x, ctx), s2, work);

  // f(x)/pi - 1 cancels against 1, so its uncertainty is measured in ulp(1).
  const long bits = ctx.internal_bits();
  const Real rel = (f_eval(x, ctx).at(bits) / machin_pi(bits) - 1).at(work);
  g.relerr_inside = certified_inside(rel, relerr_bracket(x, ctx), Real(1, work), work);
  return g;
}

std::vector<GridCheck> check_lemma_grid(std::span<const Real> xs, const PrecisionContext& ctx, Execution exec) {
  return map_indexed(xs.size(), exec, [&](std::size_t i) { return check_grid_point(xs[i], ctx); });
}

}  // namespace chpi
