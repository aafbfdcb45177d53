#pragma once

// Run parameters shared by every CLI subcommand, with a lossless JSON form
// used by --config files.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace reachkit::cli {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int d = 2;
  // Kept as text so rational values like "1/3" survive untouched.
  std::string mu = "1";
  std::string t = "1";
  // JSON set descriptor; empty means the origin.
  std::string x0;

  std::vector<int> n = {16, 64, 256, 1024};
  std::vector<int> convergence;
  int estimate = 0;
  // "left" or "breakpoints".
  std::string rule = "left";
  int grid = 360;
  int samples = 64;
  int slices = 20;
  int count = 100000;
  int max_switches = 1;
  std::uint64_t seed = 1;
  int cap = 8;

  std::string output;
  // "csv" or "json".
  std::string format = "csv";
  int threads = 0;

  bool operator==(const RunConfig&) const = default;
};

std::string to_json(const RunConfig& config);

// Applies the keys present in `text` on top of `base`. Unknown keys and
// ill-typed values raise ConfigError.
RunConfig apply_json(const RunConfig& base, const std::string& text);
RunConfig from_json(const std::string& text);

// "16,64,256" -> {16, 64, 256}; raises ConfigError on malformed input.
std::vector<int> parse_int_list(const std::string& text);

// Checks value ranges that do not need the library and rewrites x0 in
// compact canonical JSON so equal sets compare equal.
void normalize(RunConfig& config);

}  // namespace reachkit::cli
