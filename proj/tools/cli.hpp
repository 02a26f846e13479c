#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace schurid::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kInvalidConfig = 2 };

struct RunConfig {
  std::string command;
  int m = 1;
  int n = 1;
  std::string s = "0";  // an integer or "sym"
  int degree = 8;
  int weight = 6;
  int cutoff = 30;
  std::uint64_t seed = 1;
  std::uint64_t samples = 100000;
  bool samples_given = false;
  std::string alpha = "1";
  unsigned precision = 50;
  std::string output;
  std::string format = "json";
  unsigned threads = 1;
  bool timing = false;
};

/// Parses argv, validates the configuration, runs the command and writes the
/// report to --output (or `out`). Diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace schurid::cli
