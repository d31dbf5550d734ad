#include "chpi/approximants.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "chpi/error_metrics.hpp"

namespace chpi {

std::string_view to_string(ApproximantId id) {
  switch (id) {
    case ApproximantId::ch:
      return "CH";
    case ApproximantId::heron:
      return "HERON";
    case ApproximantId::snell_huygens:
      return "SNELL_HUYGENS";
    case ApproximantId::area_combo:
      return "AREA_COMBO";
    case ApproximantId::cf1:
      return "CF1";
    case ApproximantId::cf2:
      return "CF2";
    case ApproximantId::cf3:
      return "CF3";
    case ApproximantId::ch_rational:
      return "CH_RATIONAL";
  }
  return "?";
}

bool is_sinc_approximant(ApproximantId id) {
  switch (id) {
    case ApproximantId::cf1:
    case ApproximantId::cf2:
    case ApproximantId::cf3:
    case ApproximantId::ch_rational:
      return true;
    default:
      return false;
  }
}

namespace {

Real lift(const Real& x, const PrecisionContext& ctx) {
  return x.at(std::max<long>(ctx.internal_bits(), x.bits()));
}

Real third_of(const Real& a, long wa, const Real& b, long wb) { return (a * wa + b * wb) / 3; }

// Rational in c = cos x; denominators are checked so that a zero never turns
// into a silent division error.
Real sinc_rational(ApproximantId id, const Real& c) {
  Real num(c.bits());
  Real den(c.bits());
  switch (id) {
    case ApproximantId::cf1:
      num = c + 2;
      den = Real(3, c.bits());
      break;
    case ApproximantId::cf2:
      num = c * 6 + 9;
      den = c + 14;
      break;
    case ApproximantId::cf3:
      num = c * c * 6 + c * 48 + 51;
      den = c * 25 + 80;
      break;
    case ApproximantId::ch_rational:
      num = c * 15;
      den = c * 16 - c * c * 3 + 2;
      break;
    default:
      throw Error("unsupported approximant for sin(x)/x");
  }
  if (den.is_zero()) {
    throw Error("zero denominator");
  }
  return num / den;
}

void check_sinc_domain(const Real& x, long bits) {
  if (x.sign() < 0 || x > ldexp(machin_pi(bits), -2)) {
    throw Error("sinc approximant domain is [0, pi/4]");
  }
}

Real sinc_value(ApproximantId id, const Real& x, long bits) {
  if (!is_sinc_approximant(id)) {
    throw Error("unsupported approximant for sin(x)/x");
  }
  const Real arg = x.at(std::max<long>(bits, x.bits()));
  check_sinc_domain(arg, arg.bits());
  return sinc_rational(id, cos(arg));
}

}  // namespace

Real f_eval(const Real& x, const PrecisionContext& ctx) {
  if (x.sign() < 0) {
    throw Error("negative angle");
  }
  if (x.is_zero()) {
    return reference_pi(ctx);
  }
  const Real arg = lift(x, ctx);
  const Real pi = machin_pi(arg.bits());
  const Real gap = ldexp(pi, -1) - arg;
  if (gap.sign() <= 0) {
    throw Error("outside tan domain");
  }
  if (gap < Real::power_of_two(-(ctx.work_bits / 2), arg.bits())) {
    throw Error("tangent pole");
  }
  const Real combo = sin(arg) * 32 + tan(arg) * 4 - sin(ldexp(arg, 1)) * 3;
  return (pi / (arg * 30) * combo).at(ctx.work_bits);
}

Real ch_approx(SideCount n, const PrecisionContext& ctx) {
  check_side_count(n);
  return f_eval(reference_pi(ctx) / n, ctx);
}

Real ch_combination(SideCount n, const PrecisionContext& ctx) {
  const PolygonQuantities q = quantities(n, ctx);
  const PolygonQuantities q2 = quantities(2 * n, ctx);
  const Real sum = lift(q.inscribed_perimeter, ctx) * 32 + lift(q2.circumscribed_perimeter, ctx) * 4 -
                   lift(q.inscribed_area, ctx) * 6;
  return (sum / 30).at(ctx.work_bits);
}

Real heron_lower(SideCount n, const PrecisionContext& ctx) {
  const PolygonQuantities q = quantities(n, ctx);
  const PolygonQuantities q2 = quantities(2 * n, ctx);
  return third_of(lift(q2.inscribed_perimeter, ctx), 4, lift(q.inscribed_perimeter, ctx), -1).at(ctx.work_bits);
}

Real snell_huygens(SideCount n, const PrecisionContext& ctx) {
  const PolygonQuantities q = quantities(n, ctx);
  return third_of(lift(q.inscribed_perimeter, ctx), 2, lift(q.circumscribed_perimeter, ctx), 1).at(ctx.work_bits);
}

Real area_combination(SideCount n, const PrecisionContext& ctx) {
  const PolygonQuantities q = quantities(n, ctx);
  return third_of(lift(q.inscribed_area, ctx), 2, lift(q.circumscribed_area, ctx), 1).at(ctx.work_bits);
}

Real area_combination_dual(SideCount n, const PrecisionContext& ctx) {
  const PolygonQuantities q = quantities(n, ctx);
  return third_of(lift(q.inscribed_area, ctx), 1, lift(q.circumscribed_area, ctx), 2).at(ctx.work_bits);
}

Real ratio_limit(SideCount n, const PrecisionContext& ctx) {
  const long inner = ctx.internal_bits();
  const Real pi = machin_pi(inner);
  const Real numerator = snell_huygens(n, ctx).at(inner) - pi;
  const Real denominator = area_combination_dual(n, ctx).at(inner) - pi;
  const Real floor = Real::power_of_two(-(ctx.work_bits - 8), inner);
  if (abs(denominator) < floor || abs(numerator) < floor) {
    throw Error("ratio indeterminate at this precision");
  }
  return (numerator / denominator).at(ctx.work_bits);
}

Real sinc_approx(ApproximantId id, const Real& x, const PrecisionContext& ctx) {
  return sinc_value(id, x, ctx.internal_bits()).at(ctx.work_bits);
}

Real sinc_continued_fraction(const Real& x, int depth, const PrecisionContext& ctx) {
  // Partial numerators (1*2)/(1*3), (1*2)/(3*5), (3*4)/(5*7), (3*4)/(7*9),
  // each multiplying u = sin^2(x/2).
  static constexpr std::array<std::array<long, 2>, 4> kCoefficients{{{2, 3}, {2, 15}, {12, 35}, {12, 63}}};
  if (depth < 1 || depth > static_cast<int>(kCoefficients.size())) {
    throw Error("continued fraction depth must be 1..4");
  }
  const Real arg = lift(x, ctx);
  check_sinc_domain(arg, arg.bits());
  const Real half_sin = sin(ldexp(arg, -1));
  const Real u = half_sin * half_sin;

  Real tail(1, arg.bits());
  for (int k = depth - 1; k >= 0; --k) {
    const auto [num, den] = kCoefficients[static_cast<std::size_t>(k)];
    tail = 1 - u * num / den / tail;
  }
  return tail.at(ctx.work_bits);
}

ErrorConstant sinc_error_constant(ApproximantId id, const PrecisionContext& ctx) {
  if (!is_sinc_approximant(id)) {
    throw Error("unsupported approximant for sin(x)/x");
  }
  constexpr int kFirst = 8;
  constexpr int kLast = 16;
  const long bits = std::max<long>(ctx.internal_bits(), 320);

  std::vector<Real> xs;
  std::vector<Real> errors;
  for (int k = kFirst; k <= kLast; ++k) {
    Real x = Real::power_of_two(-k, bits);
    Real err = sinc_value(id, x, bits) - sin(x) / x;
    if (err.is_zero()) {
      throw Error("extrapolation failed");
    }
    xs.push_back(std::move(x));
    errors.push_back(std::move(err));
  }

  // Halving x divides the leading term by 2^order.
  int order = -1;
  for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
    const Real ratio = errors[i] / errors[i + 1];
    if (ratio.sign() <= 0) {
      throw Error("extrapolation failed");
    }
    const double log_ratio = std::log2(ratio.to_double());
    const int rounded = static_cast<int>(std::lround(log_ratio));
    if (std::abs(log_ratio - rounded) > 0.1 || (order >= 0 && rounded != order)) {
      throw Error("extrapolation failed");
    }
    order = rounded;
  }
  if (order < 1) {
    throw Error("extrapolation failed");
  }

  // Richardson table on err/x^order = c + d x^2 + e x^4 + ...
  std::vector<Real> column;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    column.push_back(errors[i] / pow(xs[i], static_cast<unsigned long>(order)));
  }
  std::vector<Real> diagonal{column.back()};
  long factor = 1;
  while (column.size() > 1) {
    factor *= 4;
    std::vector<Real> next;
    for (std::size_t i = 1; i < column.size(); ++i) {
      next.push_back(column[i] + (column[i] - column[i - 1]) / (factor - 1));
    }
    column = std::move(next);
    diagonal.push_back(column.back());
  }
  // The last two diagonal entries must agree to well beyond any reported digit.
  const Real& best = diagonal.back();
  if (relative_difference(diagonal[diagonal.size() - 2], best) > Real::ratio(1, 1000000, bits)) {
    throw Error("extrapolation failed");
  }
  return ErrorConstant{order, best.at(ctx.work_bits)};
}

Real pi_approximant(ApproximantId id, SideCount n, const PrecisionContext& ctx) {
  switch (id) {
    case ApproximantId::ch:
      return ch_approx(n, ctx);
    case ApproximantId::heron:
      return heron_lower(n, ctx);
    case ApproximantId::snell_huygens:
      return snell_huygens(n, ctx);
    case ApproximantId::area_combo:
      return area_combination(n, ctx);
    default:
      break;
  }
  check_side_count(n);
  const long inner = ctx.internal_bits();
  const Real x = machin_pi(inner) / n;
  return (sin(x) * n / sinc_value(id, x, inner)).at(ctx.work_bits);
}

ApproxReport evaluate(ApproximantId id, SideCount n, const PrecisionContext& ctx) {
  const Real value = pi_approximant(id, n, ctx);
  const AccuracyReport acc = report(value, std::nullopt, ctx);
  ApproxReport r;
  r.id = id;
  r.n_or_x = Real(n, ctx.work_bits);
  r.value = value;
  r.abs_error = acc.abs_error;
  r.rel_error = acc.rel_error;
  r.precision = acc.precision;
  r.sig_digits = acc.sig_digits;
  return r;
}

Real signed_relative_error(const Real& value, const PrecisionContext& ctx) {
  const long inner = std::max<long>(ctx.internal_bits(), value.bits());
  const Real pi = machin_pi(inner);
  return ((value.at(inner) - pi) / pi).at(ctx.work_bits);
}

}  // namespace chpi
