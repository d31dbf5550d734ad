#include "chpi/bracket.hpp"

#include <utility>

namespace chpi {

Bracket::Bracket(Real lo, Real hi) : lower(std::move(lo)), upper(std::move(hi)) {
  if (lower > upper) {
    throw Error("inverted bracket");
  }
}

Bracket inflate(const Bracket& b, const Real& amount) { return Bracket(b.lower - abs(amount), b.upper + abs(amount)); }

Bracket operator+(const Bracket& a, const Bracket& b) { return Bracket(a.lower + b.lower, a.upper + b.upper); }

Bracket operator-(const Bracket& b) { return Bracket(-b.upper, -b.lower); }

Bracket operator*(const Bracket& b, const Real& k) {
  if (k.sign() >= 0) {
    return Bracket(b.lower * k, b.upper * k);
  }
  return Bracket(b.upper * k, b.lower * k);
}

Bracket operator*(const Bracket& b, long k) {
  if (k >= 0) {
    return Bracket(b.lower * k, b.upper * k);
  }
  return Bracket(b.upper * k, b.lower * k);
}

Bracket operator+(const Bracket& b, const Real& shift) { return Bracket(b.lower + shift, b.upper + shift); }

bool certified_inside(const Real& value, const Bracket& b, const Real& scale, long bits, long ulps) {
  const Real margin = ulp(scale, bits) * ulps;
  return inflate(b, margin).strictly_contains(value);
}

}  // namespace chpi
