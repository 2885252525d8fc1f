#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitvar/lie/algebra.hpp"

namespace orbitvar::cli {

enum class Format { Json, Markdown };

struct RunConfig {
  std::string command;
  std::optional<std::string> input;
  std::optional<std::string> builtin;
  std::uint64_t seed = 0;
  Format format = Format::Json;
  bool timing = false;
};

struct RunResult {
  /// 0 no refutation, 1 refutation found, 2 input error.
  int exit_code = 0;
  /// Rendered report, empty on input error.
  std::string text;
  /// Diagnostic for input errors.
  std::string error;
};

const std::vector<std::string>& command_names();

/// FNV-1a 64 of the compact canonical JSON, as 16 hex digits.
std::string fingerprint(const lie::WeightedLieAlgebra& alg);

RunResult run(const RunConfig& config);

}  // namespace orbitvar::cli
