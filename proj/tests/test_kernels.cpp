#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "chpi/kernels.hpp"
#include "chpi/series_brackets.hpp"
#include "support.hpp"

using namespace chpi;
using chpi::test::kCtx;

TEST_CASE("map_indexed keeps index order") {
  for (const Execution exec : {Execution::serial, Execution::parallel}) {
    const auto out = map_indexed(100, exec, [](std::size_t i) { return static_cast<int>(i * i); });
    REQUIRE(out.size() == 100);
    for (std::size_t i = 0; i < out.size(); ++i) {
      CHECK(out[i] == static_cast<int>(i * i));
    }
    CHECK(map_indexed(0, exec, [](std::size_t) { return 1; }).empty());
  }
}

TEST_CASE("map_indexed rethrows the lowest failing index") {
  for (const Execution exec : {Execution::serial, Execution::parallel}) {
    const auto fn = [](std::size_t i) -> int {
      if (i == 7 || i == 40) {
        throw std::runtime_error("bad " + std::to_string(i));
      }
      return 0;
    };
    CHECK_THROWS_WITH(map_indexed(64, exec, fn), "bad 7");
  }
}

TEST_CASE("theorem certification: parallel equals serial bit for bit") {
  std::vector<SideCount> ns;
  for (SideCount n = 32; n <= 4096; n = n * 3 / 2 + 1) {
    ns.push_back(n);
  }
  const auto serial = certify_theorem(ns, kCtx, Execution::serial);
  const auto parallel = certify_theorem(ns, kCtx, Execution::parallel);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].n == parallel[i].n);
    CHECK(serial[i].rel_error.identical(parallel[i].rel_error));
    CHECK(serial[i].margin_lower.identical(parallel[i].margin_lower));
    CHECK(serial[i].passed == parallel[i].passed);
  }
}

TEST_CASE("lemma grid: parallel equals serial") {
  const auto xs = geometric_grid(16, kCtx);
  const auto serial = check_lemma_grid(xs, kCtx, Execution::serial);
  const auto parallel = check_lemma_grid(xs, kCtx, Execution::parallel);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].x.identical(parallel[i].x));
    CHECK(serial[i].all() == parallel[i].all());
  }
}
