#pragma once

// The pipeline commands behind the CLI: each takes a JSON run configuration
// and returns a self-describing report (plus a CSV rendering).

#include <string>
#include <vector>

#include "pgap/json_io.hpp"

namespace pgap {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kLibraryVersion = "0.1.0";

struct CommandOutput {
  json report;
  std::string csv;
  /// False when a check or invariant failed; the report says which.
  bool passed = true;
};

std::vector<std::string> command_names();

/// Throws pgap::Error for invalid configurations and I/O failures.
CommandOutput run_command(const std::string& command, const json& config);

/// Semigroup complement in [0, bound] by dynamic programming on the generators.
std::vector<int> semigroup_complement(const std::vector<int>& generators, int bound);

}  // namespace pgap
