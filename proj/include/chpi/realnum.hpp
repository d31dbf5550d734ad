#pragma once

#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chpi {

/// Raised for every domain, precondition, or arithmetic fault in the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Working precision for every evaluation.
///
/// Public results are rounded to `work_bits`; intermediate values are carried
/// at `work_bits + guard_bits` so the final rounding dominates the error.
struct PrecisionContext {
  long work_bits = 256;
  long guard_bits = 32;

  [[nodiscard]] long internal_bits() const { return work_bits + guard_bits; }

  friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;
};

inline constexpr long kMinWorkBits = 64;
inline constexpr long kDefaultGuardBits = 32;

/// Throws `Error("precision too low")` for work_bits < 64.
PrecisionContext make_context(long work_bits, long guard_bits = kDefaultGuardBits);

/// 256 work bits, 32 guard bits.
PrecisionContext default_context();

/// Extended-precision real backed by an MPFR value.
///
/// Every operation rounds to nearest. Binary operations take the larger of the
/// operand precisions. NaN and infinities never escape: an operation that would
/// produce one throws `Error` instead.
class Real {
 public:
  using Bits = mpfr_prec_t;

  explicit Real(Bits bits = kMinWorkBits);
  Real(long value, Bits bits);

  /// Decimal or binary-exponent literal accepted by mpfr_set_str (base 10).
  static Real from_string(std::string_view text, Bits bits);
  /// num/den rounded once.
  static Real ratio(long num, long den, Bits bits);
  /// 2^exponent, exact.
  static Real power_of_two(long exponent, Bits bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  [[nodiscard]] Bits bits() const { return mpfr_get_prec(value_); }
  [[nodiscard]] int sign() const { return mpfr_sgn(value_); }
  [[nodiscard]] bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  /// Binary exponent e with |x| = m * 2^e, 0.5 <= m < 1. Undefined for zero.
  [[nodiscard]] long exponent() const { return static_cast<long>(mpfr_get_exp(value_)); }

  /// Copy rounded (or exactly widened) to `bits`.
  [[nodiscard]] Real at(Bits bits) const;

  [[nodiscard]] double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Scientific notation with `digits` significant decimal digits, e.g.
  /// "3.1415e+00". Independent of the C locale.
  [[nodiscard]] std::string to_scientific(int digits) const;

  [[nodiscard]] mpfr_srcptr raw() const { return value_; }
  [[nodiscard]] mpfr_ptr raw() { return value_; }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator-(const Real& x);
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  friend Real operator+(const Real& a, long b);
  friend Real operator+(long a, const Real& b) { return b + a; }
  friend Real operator-(const Real& a, long b);
  friend Real operator-(long a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(const Real& a, long b);
  friend Real operator/(long a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::strong_ordering operator<=>(const Real& a, const Real& b) {
    return mpfr_cmp(a.value_, b.value_) <=> 0;
  }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }
  friend std::strong_ordering operator<=>(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) <=> 0; }

  /// Bitwise identity: same precision, same value.
  [[nodiscard]] bool identical(const Real& other) const {
    return bits() == other.bits() && (*this == other);
  }

 private:
  Real& checked(const char* what);

  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real log10(const Real& x);
Real pow(const Real& x, unsigned long exponent);
/// x * 2^e, exact.
Real ldexp(const Real& x, long e);
Real exp2(const Real& x);

/// Unit in the last place of |x| at `bits` of precision; zero for x == 0.
Real ulp(const Real& x, long bits);

/// Relative difference |a - b| / |b|.
Real relative_difference(const Real& a, const Real& b);

enum class TrigFn { sin, cos, tan };

/// Trigonometric facade: evaluated at the context's internal precision and
/// rounded to work_bits, so results sit within one ulp of the true value.
/// tan throws `Error("tangent pole")` within 2^-(work_bits/2) of pi/2 + k*pi.
Real trig(TrigFn fn, const Real& x, const PrecisionContext& ctx);

/// Pi from Machin's formula 16 atan(1/5) - 4 atan(1/239), rounded to
/// work_bits. Shares no code with the polygon or approximant modules.
Real reference_pi(const PrecisionContext& ctx);

/// Machin pi with absolute error below 2^-bits, rounded to `bits`.
Real machin_pi(long bits);

}  // namespace chpi
