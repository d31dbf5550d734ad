#pragma once

#include <mpfr.h>

#include <string_view>

#include "chpi/realnum.hpp"

namespace chpi::test {

inline constexpr long kOracleBits = 512;

inline const PrecisionContext kCtx = default_context();

inline Real lit(std::string_view text, long bits = kOracleBits) { return Real::from_string(text, bits); }

/// |a - b| <= tol * |b|, evaluated at oracle precision.
inline bool rel_close(const Real& a, const Real& b, const Real& tol) {
  return abs(a.at(kOracleBits) - b.at(kOracleBits)) <= abs(b.at(kOracleBits)) * tol.at(kOracleBits);
}

inline bool abs_close(const Real& a, const Real& b, const Real& tol) {
  return abs(a.at(kOracleBits) - b.at(kOracleBits)) <= tol.at(kOracleBits);
}

/// Pi from MPFR's own constant, independent of the Machin series under test.
inline Real mpfr_pi(long bits = kOracleBits) {
  Real r(bits);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

inline Real two_pow(long e, long bits = kOracleBits) { return Real::power_of_two(e, bits); }

}  // namespace chpi::test
