#include "chpi/error_metrics.hpp"

#include <algorithm>
#include <cmath>

namespace chpi {

Real power_of_ten(long k, long bits) {
  const Real ten(10, bits + 32);
  const unsigned long magnitude = static_cast<unsigned long>(k < 0 ? -k : k);
  const Real p = pow(ten, magnitude);
  return (k < 0 ? Real(1, bits + 32) / p : p).at(bits);
}

namespace {

struct Deviation {
  Real abs_error;
  Real rel_error;
};

Deviation deviation_from_pi(const Real& alpha, const PrecisionContext& ctx) {
  const long inner = std::max<long>(ctx.internal_bits(), alpha.bits());
  const Real pi = machin_pi(inner);
  Real err = abs(alpha.at(inner) - pi);
  if (err <= Real::power_of_two(-(ctx.work_bits - 8), inner)) {
    throw Error("increase precision");
  }
  Real rel = err / pi;
  return Deviation{std::move(err), std::move(rel)};
}

// Largest integer k with quantity < scale * 10^-k.
template <typename Threshold>
int largest_exponent_below(const Real& quantity, Threshold threshold) {
  long k = static_cast<long>(std::floor(-log10(quantity).to_double()));
  while (!(quantity < threshold(k))) {
    --k;
  }
  while (quantity < threshold(k + 1)) {
    ++k;
  }
  return static_cast<int>(k);
}

}  // namespace

int precision_of(const Real& alpha, const PrecisionContext& ctx) {
  const Deviation d = deviation_from_pi(alpha, ctx);
  const long bits = d.abs_error.bits();
  return largest_exponent_below(d.abs_error, [bits](long k) { return power_of_ten(-k, bits); });
}

int significant_digits(const Real& alpha, const PrecisionContext& ctx) {
  const Deviation d = deviation_from_pi(alpha, ctx);
  const long bits = d.rel_error.bits();
  return largest_exponent_below(d.rel_error, [bits](long k) { return ldexp(power_of_ten(-k, bits), -1); });
}

Real digits_estimate(SideCount n, const PrecisionContext& ctx) {
  if (n < 32) {
    throw Error("digit estimate requires n >= 32");
  }
  const long bits = ctx.internal_bits();
  const Real estimate = log10(Real(n, bits)) * 6 - Real::ratio(127, 100, bits);
  return estimate.at(ctx.work_bits);
}

AccuracyReport report(const Real& alpha, std::optional<SideCount> n_for_estimate, const PrecisionContext& ctx) {
  const Deviation d = deviation_from_pi(alpha, ctx);
  AccuracyReport r;
  r.value = alpha;
  r.abs_error = d.abs_error.at(ctx.work_bits);
  r.rel_error = d.rel_error.at(ctx.work_bits);
  r.precision = precision_of(alpha, ctx);
  r.sig_digits = significant_digits(alpha, ctx);
  if (n_for_estimate) {
    r.digits_estimate = digits_estimate(*n_for_estimate, ctx);
  }
  return r;
}

}  // namespace chpi
