#include "chpi/polygon.hpp"

namespace chpi {

void check_side_count(SideCount n) {
  if (n < kMinSideCount) {
    throw Error("degenerate polygon");
  }
  if (n > kMaxSideCount) {
    throw Error("side count exceeds 2^40");
  }
}

PolygonQuantities quantities(SideCount n, const PrecisionContext& ctx) {
  check_side_count(n);
  const long inner = ctx.internal_bits();
  const Real x = machin_pi(inner) / n;
  const Real s = sin(x);
  const Real c = cos(x);
  const Real t = tan(x);
  const Real s2 = sin(ldexp(x, 1));

  PolygonQuantities q;
  q.n = n;
  q.inscribed_perimeter = (s * n).at(ctx.work_bits);
  q.circumscribed_perimeter = (t * n).at(ctx.work_bits);
  q.inscribed_area = ldexp(s2 * n, -1).at(ctx.work_bits);
  q.circumscribed_area = (s / c * n).at(ctx.work_bits);
  return q;
}

PolygonQuantities doubled(const PolygonQuantities& q, const PrecisionContext& ctx) {
  check_side_count(q.n);
  check_side_count(2 * q.n);
  const long inner = ctx.internal_bits();
  const Real p = q.inscribed_perimeter.at(inner);
  const Real big_p = q.circumscribed_perimeter.at(inner);

  const Real big_p2 = ldexp(p * big_p, 1) / (p + big_p);
  const Real p2 = sqrt(p * big_p2);

  const PolygonQuantities closed = quantities(2 * q.n, ctx);
  PolygonQuantities out;
  out.n = 2 * q.n;
  out.inscribed_perimeter = p2.at(ctx.work_bits);
  out.circumscribed_perimeter = big_p2.at(ctx.work_bits);
  out.inscribed_area = closed.inscribed_area;
  out.circumscribed_area = closed.circumscribed_area;
  return out;
}

Bracket sandwich(SideCount n, const PrecisionContext& ctx) {
  PolygonQuantities q = quantities(n, ctx);
  return Bracket(std::move(q.inscribed_perimeter), std::move(q.circumscribed_perimeter));
}

}  // namespace chpi
