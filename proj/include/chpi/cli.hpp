#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "chpi/polygon.hpp"

namespace chpi::cli {

enum class Command { table, certify, compare, convergents };
enum class Format { csv, markdown };

inline constexpr std::uint64_t kDefaultSeed = 20031;

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // a certification or validation did not pass
inline constexpr int kExitUsage = 2;   // bad configuration or evaluation error

struct RunConfig {
  Command command = Command::table;
  SideCount n_min = 32;
  SideCount n_max = 1024;
  bool doubling = false;
  long precision_bits = 256;
  int grid_points = 64;
  Format format = Format::csv;
  std::optional<std::string> output_path;
  std::uint64_t seed = kDefaultSeed;
};

/// Throws chpi::Error with a user-facing message.
void validate(const RunConfig& cfg);

/// n_min, 2 n_min, 4 n_min, ... <= n_max with doubling, else every integer in range.
std::vector<SideCount> side_counts(const RunConfig& cfg);

/// Significant digits printed for a value: ceil(bits log10 2) - 5.
int decimal_digits(long bits);

// Each command writes its table to `out` and returns an exit status.
int run_table(const RunConfig& cfg, std::ostream& out);
int run_certify(const RunConfig& cfg, std::ostream& out);
int run_compare(const RunConfig& cfg, std::ostream& out);
int run_convergents(const RunConfig& cfg, std::ostream& out);

/// Validates, opens --out if given, dispatches. Errors go to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command line entry point: parses argv with CLI11 and calls run().
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chpi::cli
