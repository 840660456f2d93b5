#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace halidon::cli {

enum class Status { ok, error };

struct CommandResult {
  Status status = Status::ok;
  nlohmann::ordered_json payload = nlohmann::ordered_json::object();
  std::vector<std::string> diagnostics;
  int exit_code = 0;  ///< 0 ok, 1 domain error, 2 usage error
  bool envelope = false;
  bool pretty = false;
};

/// Parses argv (without the program name) and runs the selected subcommand.
/// Never throws; failures are reported through status and exit_code.
CommandResult run(const std::vector<std::string>& args);

/// Text written to stdout for a result.
std::string render(const CommandResult& result);

}  // namespace halidon::cli
