#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <type_traits>
#include <vector>

namespace chpi {

/// Execution mode for the grid kernels. `serial` is the reference path; the
/// OpenMP path must produce bit-identical results.
enum class Execution { serial, parallel };

/// out[i] = fn(i) for i in [0, count). Exceptions thrown by `fn` are captured
/// per index and the first one (by index) is rethrown after the loop.
template <typename Fn>
auto map_indexed(std::size_t count, Execution exec, Fn fn) -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
  using Result = std::invoke_result_t<Fn&, std::size_t>;
  std::vector<std::optional<Result>> slots(count);
  std::vector<std::exception_ptr> errors(count);

  auto body = [&](std::size_t i) {
    try {
      slots[i].emplace(fn(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };

  const auto n = static_cast<std::ptrdiff_t>(count);
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      body(static_cast<std::size_t>(i));
    }
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      body(static_cast<std::size_t>(i));
    }
  }

  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  std::vector<Result> out;
  out.reserve(count);
  for (auto& s : slots) {
    out.push_back(std::move(*s));
  }
  return out;
}

}  // namespace chpi
