#pragma once

// Command implementations behind the lorhol CLI. Each returns the exit code
// (0 ok, 1 failed mathematical check, 2 input error) and a JSON report.

#include <optional>
#include <string>

#include "json.hpp"
#include "lorhol/rational.hpp"

namespace lorhol::cli {

using nlohmann::json;

struct CommandOptions {
  std::string name;
  json input;  // null when no input was given
  std::optional<std::string> module;
  std::optional<Rational> a, c;
  std::optional<int> n;
  std::optional<std::string> expect_kind;
  std::optional<std::size_t> expect_dim;
  std::optional<bool> expect_feasible;
};

struct CommandResult {
  int exit_code = 0;
  json report;
};

const std::vector<std::string>& command_names();

CommandResult run_command(const CommandOptions& opts);

/// Parses --input: inline JSON when it starts with '{', "-" for stdin, else a path.
json read_input(const std::string& spec);

}  // namespace lorhol::cli
