#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <random>

#include "chpi/approximants.hpp"
#include "chpi/error_metrics.hpp"
#include "support.hpp"

using namespace chpi;
using chpi::test::kCtx;
using chpi::test::lit;

namespace {
Real pi512() { return test::mpfr_pi(); }
}  // namespace

TEST_CASE("precision examples") {
  CHECK(precision_of(pi512() + lit("5e-6"), kCtx) == 5);
  CHECK(precision_of(Real::ratio(22, 7, 256), kCtx) == 2);
  CHECK(precision_of(Real(4, 256), kCtx) == 0);
  CHECK(precision_of(Real(10, 256), kCtx) == -1);
  CHECK(precision_of(lit("3.1416"), kCtx) == 5);
}

TEST_CASE("significant digit examples") {
  CHECK(significant_digits(pi512() * (1 + lit("4e-6")), kCtx) == 5);
  CHECK(significant_digits(Real::ratio(22, 7, 256), kCtx) == 3);
  CHECK(significant_digits(lit("3.1416"), kCtx) == 5);
  CHECK(significant_digits(Real(3, 256), kCtx) == 1);
  CHECK(precision_of(Real(3, 256), kCtx) == 0);
}

TEST_CASE("boundary errors resolve downward") {
  // Either side of |alpha - pi| = 10^-4, resolved at oracle precision.
  const Real step = power_of_ten(-4, 512);
  CHECK(precision_of(pi512() + step * (1 + test::two_pow(-200)), kCtx) == 3);
  CHECK(precision_of(pi512() + step * (1 - test::two_pow(-200)), kCtx) == 4);
  const Real rel_step = ldexp(power_of_ten(-4, 512), -1);
  CHECK(significant_digits(pi512() * (1 + rel_step * (1 + test::two_pow(-200))), kCtx) == 3);
  CHECK(significant_digits(pi512() * (1 + rel_step * (1 - test::two_pow(-200))), kCtx) == 4);
}

TEST_CASE("alpha at pi cannot be measured") {
  CHECK_THROWS_WITH_AS(precision_of(reference_pi(kCtx), kCtx), "increase precision", Error);
  CHECK_THROWS_WITH_AS(significant_digits(pi512(), kCtx), "increase precision", Error);
  CHECK_THROWS_AS(report(pi512(), std::nullopt, kCtx), Error);
}

TEST_CASE("digit estimate") {
  CHECK(test::abs_close(digits_estimate(32), lit("7.76089986991943585641216684173"), lit("1e-28")));
  CHECK(test::abs_close(digits_estimate(96), lit("10.6236273982374104801823342613"), lit("1e-28")));
  CHECK(test::abs_close(digits_estimate(1000000), lit("34.73"), lit("1e-60")));
  CHECK_THROWS_AS(digits_estimate(31), Error);
}

TEST_CASE("report assembles the metrics") {
  const AccuracyReport r = report(ch_approx(96, kCtx), SideCount{96}, kCtx);
  CHECK(r.sig_digits >= 10);
  CHECK(r.sig_digits <= 11);
  REQUIRE(r.digits_estimate);
  CHECK(abs(*r.digits_estimate - r.sig_digits) <= 1);
  CHECK(test::rel_close(r.abs_error, lit("3.67593738516182532054001749451e-11"), lit("1e-25")));
  CHECK(test::rel_close(r.rel_error, lit("1.17008721068960170988268350245e-11"), lit("1e-25")));
  CHECK_FALSE(report(Real(3, 256), std::nullopt, kCtx).digits_estimate);

  const AccuracyReport archimedes = report(Real::ratio(22, 7, 256), std::nullopt, kCtx);
  CHECK(test::abs_close(archimedes.abs_error, lit("0.001264489267349678"), lit("1e-15")));
  CHECK(test::abs_close(archimedes.rel_error, lit("0.0004024994347707"), lit("1e-15")));
}

TEST_CASE("precision n implies n significant digits") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> exponent(-12.0, -1.0);
  std::uniform_int_distribution<int> sign(0, 1);
  const Real pi = pi512();
  for (int i = 0; i < 1000; ++i) {
    char text[32];
    std::snprintf(text, sizeof text, "%.17g", std::pow(10.0, exponent(rng)));
    const Real rel = Real::from_string(text, 512);
    const Real alpha = pi * (sign(rng) ? 1 + rel : 1 - rel);
    CHECK(significant_digits(alpha, kCtx) >= precision_of(alpha, kCtx));
  }
}

TEST_CASE("one digit of gap between the two scales") {
  // abs error in [10^-n, (pi/2) 10^-n) has precision n - 1 and n significant digits.
  for (long n = 3; n <= 10; ++n) {
    const Real alpha = pi512() + power_of_ten(-n, 512) * Real::ratio(6, 5, 512);
    INFO("n = " << n);
    CHECK(precision_of(alpha, kCtx) == n - 1);
    CHECK(significant_digits(alpha, kCtx) == n);
  }
}

TEST_CASE("measured digits track the estimate") {
  for (SideCount n = 32; n <= (SideCount{1} << 20); n *= 2) {
    const int digits = significant_digits(ch_approx(n, kCtx), kCtx);
    INFO("n = " << n << " digits " << digits);
    CHECK(abs(digits_estimate(n, kCtx) - digits) <= 1);
  }
}

TEST_CASE("powers of ten") {
  CHECK(power_of_ten(0, 64) == 1);
  CHECK(power_of_ten(3, 64) == 1000);
  CHECK(test::rel_close(power_of_ten(-3, 256), lit("0.001"), test::two_pow(-250)));
}
