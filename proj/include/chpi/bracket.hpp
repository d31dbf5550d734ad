#pragma once

#include "chpi/realnum.hpp"

namespace chpi {

/// Closed enclosure [lower, upper] of a true value.
struct Bracket {
  Real lower;
  Real upper;

  /// Throws `Error("inverted bracket")` when lower > upper.
  Bracket(Real lo, Real hi);

  [[nodiscard]] Real width() const { return upper - lower; }
  [[nodiscard]] bool contains(const Real& v) const { return lower <= v && v <= upper; }
  /// lower < v < upper.
  [[nodiscard]] bool strictly_contains(const Real& v) const { return lower < v && v < upper; }
};

/// [lower - amount, upper + amount].
Bracket inflate(const Bracket& b, const Real& amount);

Bracket operator+(const Bracket& a, const Bracket& b);
Bracket operator-(const Bracket& b);
/// Scales by a constant of either sign.
Bracket operator*(const Bracket& b, const Real& k);
Bracket operator*(const Bracket& b, long k);
Bracket operator+(const Bracket& b, const Real& shift);

/// Strict containment after inflating the bracket outward by `ulps` units of
/// `scale`'s last place at `bits`: the tolerance covers rounding in both the
/// endpoints and the tested value.
bool certified_inside(const Real& value, const Bracket& b, const Real& scale, long bits, long ulps = 4);

}  // namespace chpi
