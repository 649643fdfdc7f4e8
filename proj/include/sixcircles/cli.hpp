#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sixcircles/report.hpp"

namespace sixcircles {

/// Options shared by the subcommands. Precedence, lowest first: built-in
/// defaults, SIXCIRCLES_SEED (seed only), --config file, command-line flags.
struct RunConfig {
  std::string selector = "all";
  /// general | acute | angle-b:<degrees>; replaces the identity's sampler.
  std::optional<std::string> constraint;
  std::optional<std::size_t> n;
  std::uint64_t seed = 1;
  std::vector<int> widths{53};
  double tolerance = kDefaultTolerance;
  double min_angle = 0.1;
  std::string out;
  std::optional<ReportFormat> format;
  int threads = 0;
  std::uint64_t index = 0;
  std::size_t samples = 50;
  std::string group = "dihedral";
};

inline constexpr const char* kSeedEnvironment = "SIXCIRCLES_SEED";

/// Apply `key = value` lines (blank lines and '#' comments ignored).
/// Throws std::invalid_argument on unknown keys or malformed values.
void apply_config_text(const std::string& text, RunConfig& cfg);

/// Parse an override such as "angle-b:120" into a sampler.
SamplerSpec parse_constraint(const std::string& text, SamplerSpec base);

/// Exit status: 0 when every requested check passes, 1 on a failed check,
/// 2 on bad arguments.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv);

}  // namespace sixcircles
