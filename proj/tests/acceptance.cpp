// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chpi/approximants.hpp"
#include "chpi/cli.hpp"
#include "chpi/error_metrics.hpp"
#include "chpi/polygon.hpp"
#include "chpi/series_brackets.hpp"

using namespace chpi;

namespace {

const PrecisionContext kCtx = default_context();

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

std::vector<SideCount> doubling_grid() {
  std::vector<SideCount> ns;
  for (SideCount n = 32; n <= (SideCount{1} << 20); n *= 2) {
    ns.push_back(n);
  }
  return ns;
}

std::string str(SideCount n) { return std::to_string(n); }

Outcome theorem() {
  Outcome o;
  const std::vector<SideCount> ns{32, 33, 48, 64, 96, 128, 1024, 100000, SideCount{1} << 20};
  for (const BoundCheck& c : certify_theorem(ns, kCtx)) {
    o.require(c.passed, "bound violated or margin under 4 ulp at n=" + str(c.n));
  }
  if (o.passed) {
    o.detail = "9 side counts, 4-ulp inflation";
  }
  return o;
}

Outcome best_constant() {
  Outcome o;
  const Real p = best_constant_probe(1000000, kCtx);
  o.require(abs(p - 1) <= Real::ratio(1, 100000000, kCtx.work_bits), "probe(10^6) not within 1e-8 of 1");
  Real previous = best_constant_probe(32, kCtx);
  for (int k = 1; k <= 14; ++k) {
    const SideCount n = SideCount{32} << k;
    Real next = best_constant_probe(n, kCtx);
    o.require(next < previous, "probe not decreasing at n=" + str(n));
    previous = std::move(next);
  }
  if (o.passed) {
    o.detail = "probe(10^6) - 1 = " + (p - 1).to_scientific(3);
  }
  return o;
}

Outcome excess() {
  Outcome o;
  const Real pi = reference_pi(kCtx);
  std::vector<SideCount> ns = doubling_grid();
  ns.insert(ns.end(), {33, 48, 96, 1000, 100000});
  for (const SideCount n : ns) {
    o.require(ch_approx(n, kCtx) > pi, "not in excess at n=" + str(n));
  }
  std::optional<Real> previous;
  for (const SideCount n : doubling_grid()) {
    Real gap = ch_approx(n, kCtx) - pi;
    o.require(!previous || gap < *previous, "excess not decreasing at n=" + str(n));
    previous = std::move(gap);
  }
  if (o.passed) {
    o.detail = "excess and decreasing for n = 32..2^20";
  }
  return o;
}

Outcome digits() {
  Outcome o;
  Real worst(0, kCtx.work_bits);
  for (const SideCount n : doubling_grid()) {
    const int measured = significant_digits(ch_approx(n, kCtx), kCtx);
    const Real deviation = abs(digits_estimate(n, kCtx) - measured);
    o.require(deviation <= 1, "digit estimate off by more than 1 at n=" + str(n));
    if (deviation > worst) {
      worst = deviation;
    }
  }
  if (o.passed) {
    o.detail = "max |digits - estimate| = " + worst.to_scientific(3);
  }
  return o;
}

Outcome lemma_brackets(const std::vector<GridCheck>& grid) {
  Outcome o;
  for (const GridCheck& g : grid) {
    o.require(g.sin_inside && g.tan_inside && g.sin2x_inside,
              "facade value outside bracket at x=" + g.x.to_scientific(6));
  }
  const Real r0 = tan_deriv11(Real(0, kCtx.work_bits), kCtx);
  o.require(r0 == 353792, "R(0) != 353792");
  const Real r32 = tan_deriv11(ldexp(reference_pi(kCtx), -5), kCtx);
  o.require(abs(r32 - Real::from_string("469223.994", kCtx.work_bits)) < Real::ratio(1, 100, kCtx.work_bits),
            "R(pi/32) not within 0.01 of 469223.994");
  if (o.passed) {
    o.detail = std::to_string(grid.size()) + " points, R(pi/32) = " + r32.to_scientific(12);
  }
  return o;
}

Outcome composition(const std::vector<GridCheck>& grid) {
  Outcome o;
  for (const GridCheck& g : grid) {
    o.require(g.relerr_inside, "f(x)/pi - 1 outside bracket at x=" + g.x.to_scientific(6));
  }
  if (o.passed) {
    o.detail = std::to_string(grid.size()) + " points";
  }
  return o;
}

Outcome orderings() {
  Outcome o;
  const Real pi = reference_pi(kCtx);
  std::vector<SideCount> ns;
  for (SideCount n = 3; n <= 12; ++n) {
    ns.push_back(n);
  }
  for (const SideCount n : doubling_grid()) {
    ns.push_back(n);
  }
  for (const SideCount n : ns) {
    const Bracket b = sandwich(n, kCtx);
    o.require(b.lower < pi && pi < b.upper, "pi_n < pi < Pi_n fails at n=" + str(n));
    o.require(heron_lower(n, kCtx) < pi, "heron not below pi at n=" + str(n));
    o.require(pi < snell_huygens(n, kCtx), "snell-huygens not above pi at n=" + str(n));
  }
  if (o.passed) {
    o.detail = "n = 3..12 and 32..2^20";
  }
  return o;
}

Outcome archimedes() {
  Outcome o;
  const PolygonQuantities q = quantities(96, kCtx);
  o.require(q.inscribed_perimeter > 3 + Real::ratio(10, 71, kCtx.work_bits), "pi_96 <= 3 10/71");
  o.require(q.circumscribed_perimeter < Real::ratio(22, 7, kCtx.work_bits), "Pi_96 >= 22/7");
  if (o.passed) {
    o.detail = "pi_96 = " + q.inscribed_perimeter.to_scientific(10) + ", Pi_96 = " +
               q.circumscribed_perimeter.to_scientific(10);
  }
  return o;
}

Outcome three_eighths() {
  Outcome o;
  const Real target = Real::ratio(3, 8, kCtx.work_bits);
  const Real r16 = ratio_limit(SideCount{1} << 16, kCtx);
  o.require(abs(r16 - target) < Real::ratio(1, 10000, kCtx.work_bits), "|ratio(2^16) - 3/8| >= 1e-4");
  std::optional<Real> previous;
  for (int k = 5; k <= 17; ++k) {
    Real dev = abs(ratio_limit(SideCount{1} << k, kCtx) - target);
    o.require(!previous || dev < *previous, "deviation not decreasing at n=2^" + std::to_string(k));
    previous = std::move(dev);
  }
  if (o.passed) {
    o.detail = "ratio(2^16) = " + r16.to_scientific(12);
  }
  return o;
}

Outcome constants() {
  Outcome o;
  struct Expected {
    ApproximantId id;
    int order;
    long denominator;
    int sign;  // approx - sin(x)/x: convergents in excess, CH rational in defect
  };
  const Expected expected[] = {{ApproximantId::cf1, 4, 180, 1},
                               {ApproximantId::cf2, 6, 2100, 1},
                               {ApproximantId::cf3, 8, 44100, 1},
                               {ApproximantId::ch_rational, 6, 105, -1}};
  const long bits = kCtx.internal_bits();
  const Real tol = Real::ratio(1, 10000, bits);
  std::optional<Real> ch, newton;
  for (const Expected& e : expected) {
    const ErrorConstant ec = sinc_error_constant(e.id, kCtx);
    const std::string name(to_string(e.id));
    o.require(ec.order == e.order, name + " order " + std::to_string(ec.order));
    o.require(relative_difference(abs(ec.constant.at(bits)), Real(1, bits) / e.denominator) <= tol,
              name + " magnitude off by more than 1e-4");
    o.require(ec.constant.sign() == e.sign, name + " sign");
    if (e.id == ApproximantId::ch_rational) {
      ch = ec.constant;
    } else if (e.id == ApproximantId::cf2) {
      newton = ec.constant;
    }
  }
  const Real ratio = abs(*ch / *newton);
  o.require(relative_difference(ratio.at(bits), Real(20, bits)) <= Real::ratio(1, 100, bits),
            "CH/Newton constant ratio not 20 within 1%");
  if (o.passed) {
    o.detail = "CH/Newton = " + ratio.to_scientific(8);
  }
  return o;
}

Outcome metric_implication() {
  Outcome o;
  const long bits = 512;
  const Real pi = machin_pi(bits);
  std::mt19937_64 rng(20031);
  std::uniform_real_distribution<double> exponent(-12.0, -1.0);
  for (int i = 0; i < 1000; ++i) {
    char text[32];
    std::snprintf(text, sizeof text, "%.17g", std::pow(10.0, exponent(rng)));
    const bool above = (rng() & 1U) != 0;
    const Real rel = Real::from_string(text, bits);
    const Real alpha = pi * (above ? 1 + rel : 1 - rel);
    o.require(significant_digits(alpha, kCtx) >= precision_of(alpha, kCtx), "implication fails on sample");
  }
  for (long n = 3; n <= 10; ++n) {
    const Real alpha = pi + power_of_ten(-n, bits) * Real::ratio(6, 5, bits);
    o.require(precision_of(alpha, kCtx) == n - 1 && significant_digits(alpha, kCtx) == n,
              "no gap witness for n=" + std::to_string(n));
  }
  if (o.passed) {
    o.detail = "1000 samples, witnesses n = 3..10";
  }
  return o;
}

std::string cli_output(const std::vector<std::string>& args, int& status) {
  std::vector<const char*> argv{"chpi"};
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out, err;
  status = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

Outcome engineering() {
  Outcome o;
  const Real tol = Real::power_of_two(-(kCtx.work_bits - 8), kCtx.work_bits);
  PolygonQuantities q = quantities(6, kCtx);
  for (int step = 1; step <= 20; ++step) {
    q = doubled(q, kCtx);
    const PolygonQuantities closed = quantities(q.n, kCtx);
    o.require(relative_difference(q.inscribed_perimeter, closed.inscribed_perimeter) <= tol &&
                  relative_difference(q.circumscribed_perimeter, closed.circumscribed_perimeter) <= tol,
              "doubling drifted at n=" + str(q.n));
  }
  for (SideCount n = 3; n <= 100000; n = n * 2 + 1) {
    const PolygonQuantities p = quantities(n, kCtx);
    o.require(abs(p.circumscribed_area - p.circumscribed_perimeter) <= ulp(p.circumscribed_perimeter, kCtx.work_bits) * 4,
              "A_n != Pi_n at n=" + str(n));
  }
  const std::vector<std::vector<std::string>> configs{
      {"table", "--n-min", "16", "--n-max", "4096", "--doubling"},
      {"certify", "--n-min", "32", "--n-max", "65536", "--grid", "16", "--seed", "7"},
      {"compare", "--n-min", "6", "--n-max", "6144", "--doubling", "--format", "md"},
  };
  for (const auto& args : configs) {
    int s1 = 0;
    int s2 = 0;
    const std::string first = cli_output(args, s1);
    const std::string second = cli_output(args, s2);
    o.require(s1 == 0 && s2 == 0 && !first.empty() && first == second, "CLI output differs for " + args[0]);
  }
  if (o.passed) {
    o.detail = "20-step chain, A_n = Pi_n, 3 CLI configs byte-identical";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Real> xs = geometric_grid(64, kCtx);
  const std::vector<GridCheck> grid = check_lemma_grid(xs, kCtx);

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"theorem bound for n >= 32", theorem},
      {"best possible constant", best_constant},
      {"CH approximant in excess", excess},
      {"digit estimate within 1", digits},
      {"series brackets and R bounds", [&] { return lemma_brackets(grid); }},
      {"relative-error composition", [&] { return composition(grid); }},
      {"polygon and combination orderings", orderings},
      {"3 10/71 < pi < 3 1/7", archimedes},
      {"Snell-Huygens ratio tends to 3/8", three_eighths},
      {"convergent error constants", constants},
      {"precision implies significant digits", metric_implication},
      {"engineering invariants", engineering},
  };

  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += o.passed ? 0 : 1;
    std::printf("%s %2d %s: %s\n", o.passed ? "PASS" : "FAIL", index, name, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", index - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
