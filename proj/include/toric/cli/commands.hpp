#pragma once

#include "toric/cli/document.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace toric::cli {

struct CommandOptions {
  std::optional<std::string> v;  // "a,b,..." rational coordinates
  std::optional<std::int64_t> m;
  std::optional<std::filesystem::path> out;
};

struct CommandResult {
  int exit_code = 0;
  std::string out;  // stdout payload
  std::string err;  // stderr payload
};

/// 0 success, 1 validation failure, 2 precondition failure,
/// 3 internal certificate or self-check failure.
int exit_code_for(ErrorKind kind);

CommandResult cmd_validate(const std::filesystem::path& input);
CommandResult cmd_thresholds(const std::filesystem::path& input);
CommandResult cmd_kstability(const std::filesystem::path& input);
/// Writes G.csv and mu.csv into --out (default: current directory).
CommandResult cmd_measure(const std::filesystem::path& input, const CommandOptions& opts);
/// Everything above in one document. With --out, per-valuation CSVs are
/// written there and referenced by file name.
CommandResult cmd_report(const std::filesystem::path& input, const CommandOptions& opts = {});

/// Dispatch by command name; unknown names are a usage error.
CommandResult run_command(const std::string& command, const std::filesystem::path& input, const CommandOptions& opts);

/// Parses "a,b,..." into a rational vector.
RationalVector parse_vector_option(const std::string& text);

}  // namespace toric::cli
