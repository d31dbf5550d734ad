#pragma once

#include <cstdint>

#include "chpi/bracket.hpp"
#include "chpi/realnum.hpp"

namespace chpi {

using SideCount = std::int64_t;

inline constexpr SideCount kMinSideCount = 3;
inline constexpr SideCount kMaxSideCount = SideCount{1} << 40;

/// Regular n-gon measurements.
///
/// Perimeters are taken in a circle of perimeter pi (radius 1/2), areas in a
/// circle of area pi (radius 1). With x = pi/n:
///
///   inscribed_perimeter     = n sin x
///   circumscribed_perimeter = n tan x
///   inscribed_area          = (n/2) sin 2x
///   circumscribed_area      = n tan x
///
/// The two circumscribed quantities coincide; they are evaluated through
/// different expressions (tan x vs sin x / cos x) so that a test can compare
/// them.
struct PolygonQuantities {
  SideCount n = 0;
  Real inscribed_perimeter;
  Real circumscribed_perimeter;
  Real inscribed_area;
  Real circumscribed_area;
};

/// Throws "degenerate polygon" for n < 3 and "side count exceeds 2^40" above the cap.
void check_side_count(SideCount n);

/// Closed trigonometric forms, rounded to work_bits.
PolygonQuantities quantities(SideCount n, const PrecisionContext& ctx);

/// Archimedean doubling: the circumscribed perimeter for 2n is the harmonic
/// mean of the n-gon perimeters, the inscribed one the geometric mean of the
/// old inscribed and new circumscribed perimeters. Areas for 2n come from the
/// closed forms.
PolygonQuantities doubled(const PolygonQuantities& q, const PrecisionContext& ctx);

/// [inscribed_perimeter, circumscribed_perimeter], which contains pi.
Bracket sandwich(SideCount n, const PrecisionContext& ctx);

}  // namespace chpi
