#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace hypend::cli {

inline constexpr const char* kSchemaVersion = "v1";

enum ExitCode : int { ok = 0, internal_error = 1, validation_error = 2, numeric_failure = 3 };

/// Command-line overrides; each takes precedence over the same field in the
/// request document.
struct Overrides {
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::optional<long long> samples;
};

struct Outcome {
  int exit_code = ok;
  /// Result or error document (JSON, one line, trailing newline).
  std::string output;
  /// Comma-separated table for commands that produce grids or trajectories;
  /// empty otherwise.
  std::string csv;
};

/// Validates and runs one request document.
Outcome execute(const std::string& request, const Overrides& overrides = {});

/// The published JSON Schema for requests ("input") or results ("output").
/// Throws std::invalid_argument for any other name.
std::string schema(const std::string& which);

/// Rounds to 12 significant digits.
double round12(double x);

}  // namespace hypend::cli
