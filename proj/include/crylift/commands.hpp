#pragma once

// Subcommand bodies shared by the CLI and the tests. Each takes the parsed
// JSON request and returns the exit code with the JSON response; exceptions
// are mapped by guarded().

#include "crylift/certificate_verify.hpp"
#include "crylift/errors.hpp"
#include "crylift/sweep.hpp"

#include <json.hpp>

#include <functional>
#include <optional>
#include <string>

namespace crylift::cli {

using nlohmann::json;

struct CommandResult {
  ExitCode code = ExitCode::kOk;
  json output;
};

json error_json(ExitCode code, const std::string& message);

/// Runs `body`, mapping MalformedInput / json errors to 2, Infeasible to 3
/// and anything else to 4, each with a structured error document.
CommandResult guarded(const std::function<CommandResult()>& body);

CommandResult cmd_digits(const json& request);
CommandResult cmd_transport(const json& request);
CommandResult cmd_regular(const json& request);
CommandResult cmd_lift(const json& request);
CommandResult cmd_induction(const json& request);
CommandResult cmd_twist(const json& request);
CommandResult cmd_verify(const json& certificate, const verify::VerifyOptions& options = {});

/// Runs the sweep, writes the report to `out_path` (when given) and returns
/// the totals. Exit code 4 iff any instance failed.
CommandResult cmd_sweep(const sweep::SweepConfig& config, const std::optional<std::string>& out_path);

}  // namespace crylift::cli
