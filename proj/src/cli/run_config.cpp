#include <CLI11.hpp>

#include <cmath>
#include <map>
#include <ostream>

#include "chpi/cli.hpp"
#include "chpi/realnum.hpp"

namespace chpi::cli {

namespace {
constexpr std::size_t kMaxRows = 100000;
}

void validate(const RunConfig& cfg) {
  make_context(cfg.precision_bits);
  if (cfg.grid_points < 8) {
    throw Error("grid points must be >= 8");
  }
  const bool empty_certify = cfg.command == Command::certify && cfg.n_min > cfg.n_max;
  if (cfg.n_min > cfg.n_max && !empty_certify) {
    throw Error("n-min exceeds n-max");
  }
  if (cfg.command == Command::convergents || empty_certify) {
    return;
  }
  if (cfg.command == Command::certify && cfg.n_min < 32) {
    throw Error("theorem hypothesis n >= 32 violated (n-min " + std::to_string(cfg.n_min) + ")");
  }
  if (cfg.command == Command::compare && cfg.n_min < 4) {
    throw Error("compare needs n-min >= 4 (sin(x)/x approximants are defined for x <= pi/4)");
  }
  check_side_count(cfg.n_min);
  check_side_count(cfg.n_max);
  if (cfg.command != Command::certify && !cfg.doubling &&
      static_cast<std::size_t>(cfg.n_max - cfg.n_min) >= kMaxRows) {
    throw Error("range too large for one row per n; use --doubling");
  }
}

std::vector<SideCount> side_counts(const RunConfig& cfg) {
  std::vector<SideCount> ns;
  if (cfg.n_min > cfg.n_max) {
    return ns;
  }
  if (cfg.doubling) {
    for (SideCount n = cfg.n_min; n <= cfg.n_max; n *= 2) {
      ns.push_back(n);
    }
  } else {
    for (SideCount n = cfg.n_min; n <= cfg.n_max; ++n) {
      ns.push_back(n);
    }
  }
  return ns;
}

int decimal_digits(long bits) {
  return static_cast<int>(std::ceil(static_cast<double>(bits) * 0.30102999566398119521)) - 5;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circle approximants of pi and certification of the CH error bound", "chpi"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "csv";
  std::string out_path;

  const std::map<std::string, Command> commands{{"table", Command::table},
                                                {"certify", Command::certify},
                                                {"compare", Command::compare},
                                                {"convergents", Command::convergents}};
  const std::map<std::string, std::string> descriptions{
      {"table", "CH approximant per n with both accuracy measures and the error bounds"},
      {"certify", "certify the two-sided relative error bound (n >= 32)"},
      {"compare", "signed errors of the classical approximants and the 3/8 ratio"},
      {"convergents", "leading error terms of the sin(x)/x convergents"}};

  std::vector<CLI::App*> subs;
  for (const auto& [name, command] : commands) {
    CLI::App* sub = app.add_subcommand(name, descriptions.at(name));
    sub->add_option("--n-min", cfg.n_min, "smallest side count")->capture_default_str();
    sub->add_option("--n-max", cfg.n_max, "largest side count")->capture_default_str();
    sub->add_flag("--doubling", cfg.doubling, "n_min, 2 n_min, 4 n_min, ... instead of every n");
    sub->add_option("--bits", cfg.precision_bits, "working precision in bits")->capture_default_str();
    sub->add_option("--grid", cfg.grid_points, "grid points / random odd n count")->capture_default_str();
    sub->add_option("--format", format, "csv or md")
        ->check(CLI::IsMember({"csv", "md", "markdown"}))
        ->capture_default_str();
    sub->add_option("--out", out_path, "write the table to this file");
    sub->add_option("--seed", cfg.seed, "seed for random odd n")->capture_default_str();
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  for (CLI::App* sub : subs) {
    if (sub->parsed()) {
      cfg.command = commands.at(sub->get_name());
    }
  }
  cfg.format = format == "csv" ? Format::csv : Format::markdown;
  if (!out_path.empty()) {
    cfg.output_path = out_path;
  }
  return run(cfg, out, err);
}

}  // namespace chpi::cli
