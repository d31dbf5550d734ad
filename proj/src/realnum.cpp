#include "chpi/realnum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>

namespace chpi {

PrecisionContext make_context(long work_bits, long guard_bits) {
  if (work_bits < kMinWorkBits) {
    throw Error("precision too low");
  }
  if (guard_bits < 0) {
    throw Error("guard bits must be non-negative");
  }
  return PrecisionContext{work_bits, guard_bits};
}

PrecisionContext default_context() { return PrecisionContext{256, kDefaultGuardBits}; }

Real::Real(Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real Real::from_string(std::string_view text, Bits bits) {
  Real r(bits);
  const std::string copy(text);
  if (mpfr_set_str(r.value_, copy.c_str(), 10, MPFR_RNDN) != 0) {
    throw Error("malformed real literal: " + copy);
  }
  return r.checked("literal");
}

Real Real::ratio(long num, long den, Bits bits) {
  if (den == 0) {
    throw Error("division by zero");
  }
  Real r(num, bits + 64);
  mpfr_div_si(r.value_, r.value_, den, MPFR_RNDN);
  return r.at(bits);
}

Real Real::power_of_two(long exponent, Bits bits) {
  Real r(1, bits);
  mpfr_mul_2si(r.value_, r.value_, exponent, MPFR_RNDN);
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::at(Bits bits) const {
  Real r(bits);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

std::string Real::to_scientific(int digits) const {
  digits = std::max(digits, 2);
  mpfr_exp_t exp10 = 0;
  char* raw_digits = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), value_, MPFR_RNDN);
  std::string mantissa(raw_digits);
  mpfr_free_str(raw_digits);

  std::string out;
  if (!mantissa.empty() && mantissa.front() == '-') {
    out.push_back('-');
    mantissa.erase(0, 1);
  }
  out.push_back(mantissa.front());
  out.push_back('.');
  out.append(mantissa, 1, std::string::npos);

  const long exponent = is_zero() ? 0 : static_cast<long>(exp10) - 1;
  char buf[32];
  std::snprintf(buf, sizeof buf, "e%c%02ld", exponent < 0 ? '-' : '+', exponent < 0 ? -exponent : exponent);
  out += buf;
  return out;
}

Real& Real::checked(const char* what) {
  if (mpfr_nan_p(value_) != 0 || mpfr_inf_p(value_) != 0) {
    throw Error(std::string("non-finite result in ") + what);
  }
  return *this;
}

Real& Real::operator+=(const Real& rhs) { return *this = *this + rhs; }
Real& Real::operator-=(const Real& rhs) { return *this = *this - rhs; }
Real& Real::operator*=(const Real& rhs) { return *this = *this * rhs; }
Real& Real::operator/=(const Real& rhs) { return *this = *this / rhs; }

Real operator-(const Real& x) {
  Real r(x.bits());
  mpfr_neg(r.value_, x.value_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r(std::max(a.bits(), b.bits()));
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return std::move(r.checked("addition"));
}

Real operator-(const Real& a, const Real& b) {
  Real r(std::max(a.bits(), b.bits()));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return std::move(r.checked("subtraction"));
}

Real operator*(const Real& a, const Real& b) {
  Real r(std::max(a.bits(), b.bits()));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return std::move(r.checked("multiplication"));
}

Real operator/(const Real& a, const Real& b) {
  if (b.is_zero()) {
    throw Error("division by zero");
  }
  Real r(std::max(a.bits(), b.bits()));
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return std::move(r.checked("division"));
}

Real operator+(const Real& a, long b) {
  Real r(a.bits());
  mpfr_add_si(r.value_, a.value_, b, MPFR_RNDN);
  return std::move(r.checked("addition"));
}

Real operator-(const Real& a, long b) {
  Real r(a.bits());
  mpfr_sub_si(r.value_, a.value_, b, MPFR_RNDN);
  return std::move(r.checked("subtraction"));
}

Real operator-(long a, const Real& b) {
  Real r(b.bits());
  mpfr_si_sub(r.value_, a, b.value_, MPFR_RNDN);
  return std::move(r.checked("subtraction"));
}

Real operator*(const Real& a, long b) {
  Real r(a.bits());
  mpfr_mul_si(r.value_, a.value_, b, MPFR_RNDN);
  return std::move(r.checked("multiplication"));
}

Real operator/(const Real& a, long b) {
  if (b == 0) {
    throw Error("division by zero");
  }
  Real r(a.bits());
  mpfr_div_si(r.value_, a.value_, b, MPFR_RNDN);
  return std::move(r.checked("division"));
}

Real operator/(long a, const Real& b) {
  if (b.is_zero()) {
    throw Error("division by zero");
  }
  Real r(b.bits());
  mpfr_si_div(r.value_, a, b.value_, MPFR_RNDN);
  return std::move(r.checked("division"));
}

Real abs(const Real& x) {
  Real r(x.bits());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  if (x.sign() < 0) {
    throw Error("square root of a negative number");
  }
  Real r(x.bits());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real sin(const Real& x) {
  Real r(x.bits());
  mpfr_sin(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real cos(const Real& x) {
  Real r(x.bits());
  mpfr_cos(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real tan(const Real& x) {
  Real r(x.bits());
  mpfr_tan(r.raw(), x.raw(), MPFR_RNDN);
  if (mpfr_number_p(r.raw()) == 0) {
    throw Error("tangent pole");
  }
  return r;
}

Real log10(const Real& x) {
  if (x.sign() <= 0) {
    throw Error("logarithm of a non-positive number");
  }
  Real r(x.bits());
  mpfr_log10(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, unsigned long exponent) {
  Real r(x.bits());
  mpfr_pow_ui(r.raw(), x.raw(), exponent, MPFR_RNDN);
  if (mpfr_number_p(r.raw()) == 0) {
    throw Error("non-finite result in pow");
  }
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r(x.bits());
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

Real exp2(const Real& x) {
  Real r(x.bits());
  mpfr_exp2(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real ulp(const Real& x, long bits) {
  if (x.is_zero()) {
    return Real(0, bits);
  }
  return Real::power_of_two(x.exponent() - bits, bits);
}

Real relative_difference(const Real& a, const Real& b) { return abs(a - b) / abs(b); }

namespace {

// sum_{k>=0} (-1)^k / ((2k+1) m^(2k+1)), stopped once the next term drops
// below 2^-target; the alternating tail is bounded by that term.
Real atan_inverse(long m, long target_bits, long work) {
  Real power = Real(1, work) / m;
  Real sum = power;
  const Real threshold = Real::power_of_two(-target_bits, work);
  const long m2 = m * m;
  for (long k = 1;; ++k) {
    power = power / m2;
    Real term = power / (2 * k + 1);
    if (term < threshold) {
      break;
    }
    if (k % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

}  // namespace

Real machin_pi(long bits) {
  thread_local std::map<long, Real> cache;
  if (auto it = cache.find(bits); it != cache.end()) {
    return it->second;
  }
  const long work = bits + 40;
  const long target = bits + 8;
  Real pi = atan_inverse(5, target, work) * 16 - atan_inverse(239, target, work) * 4;
  Real rounded = pi.at(bits);
  cache.emplace(bits, rounded);
  return rounded;
}

Real reference_pi(const PrecisionContext& ctx) { return machin_pi(ctx.internal_bits()).at(ctx.work_bits); }

Real trig(TrigFn fn, const Real& x, const PrecisionContext& ctx) {
  const long inner = ctx.internal_bits();
  const Real arg = x.at(std::max<long>(inner, x.bits()));
  switch (fn) {
    case TrigFn::sin:
      return sin(arg).at(ctx.work_bits);
    case TrigFn::cos:
      return cos(arg).at(ctx.work_bits);
    case TrigFn::tan: {
      const Real pi = machin_pi(std::max<long>(inner, x.bits()) + 16);
      const Real half_pi = ldexp(pi, -1);
      // Nearest pole pi/2 + k*pi.
      Real k(inner);
      mpfr_round(k.raw(), ((arg - half_pi) / pi).raw());
      const Real distance = abs(arg - half_pi - k * pi);
      if (distance < Real::power_of_two(-(ctx.work_bits / 2), inner)) {
        throw Error("tangent pole");
      }
      return tan(arg).at(ctx.work_bits);
    }
  }
  throw Error("unknown trigonometric function");
}

}  // namespace chpi
