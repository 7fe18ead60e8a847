#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace vosa::cli {

// One batch invocation. Strings hold the raw flag values; numbers are parsed
// by run() so malformed input maps to exit status 2.
struct RunConfig {
  std::string command;
  std::string algebra = "sl2";  // "sl2" or a path to algebra JSON
  std::string module;           // descriptor JSON, inline or a path
  std::string system = "fermion";
  std::string level = "1";
  std::string spin = "0";
  std::string grade = "0";
  std::string c = "1/2";
  std::string h = "0";
  std::string field_a = R"({"gen":"psi","color":0})";
  std::string field_b = R"({"gen":"psi","color":0})";
  std::optional<std::string> depth;  // falls back to VOSA_DEPTH, then 2
  std::string format = "json";
  std::uint64_t seed = 0;
  int samples = 0;  // 0 checks every pair; otherwise a seeded random subset
};

struct RunResult {
  int status = 0;    // 0 pass, 1 check failure, 2 malformed input
  std::string out;   // report
  std::string err;   // human summary
};

RunResult run(const RunConfig& config);

// Parses argv with CLI11 and runs; used by the executable.
int main(int argc, char** argv);

}  // namespace vosa::cli
