#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cteleport/report_json.hpp"
#include "cteleport/teleport.hpp"

namespace cteleport::cli {

enum class Command { purity, criterion, scan, teleport, eq5check };
enum class OutputFormat { table, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFail = 1;
inline constexpr int kExitInputError = 2;

struct CliConfig {
  Command command = Command::purity;
  std::string state;
  RoleAssignment assignment;
  double theta = 0.0;
  // "random" or four comma-separated coefficients, each "re" or "re:im".
  std::string input = "random";
  std::uint64_t seed = 0;
  OutputFormat output = OutputFormat::table;
  double tol = kDefaultTolerance;
};

// Radians, either a number or a multiple of pi: "pi", "-pi/2", "3*pi/4".
double parse_theta(std::string_view text);
// "1,4" -> {1, 4}
std::array<int, 2> parse_pair(std::string_view text);
// "1,0,0,0" or "0.5:0.5,0,0,0.5:-0.5"; not renormalized here.
std::vector<Amplitude> parse_coefficients(std::string_view text);

// Builds the report for a config. Throws StateFormatError or
// std::invalid_argument on bad input.
Json build_report(const CliConfig& config);
std::string render_table(Command command, const Json& report);

// Runs one command, writing the report to `out` and diagnostics to `err`.
// Returns 0, 1 (criterion verdict FAIL) or 2 (input error).
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

// argv entry point, including flag parsing.
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cteleport::cli
