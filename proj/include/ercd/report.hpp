#pragma once

#include <string>

#include <json.hpp>

#include "ercd/config.hpp"

namespace ercd {

// Outcome of one CLI command: the machine-readable report plus the
// aggregated pass flag that drives the process exit status.
struct CommandResult {
  nlohmann::json report;
  bool pass = false;
};

CommandResult cmd_verify_algebra(const RunConfig& cfg);
CommandResult cmd_verify_duality(const RunConfig& cfg);
CommandResult cmd_charges(const RunConfig& cfg);
CommandResult cmd_poincare(const RunConfig& cfg);

// Stable serialization: 2-space indent, sorted keys, trailing newline.
// Identical config + seed produce byte-identical output except for the
// wall_time_s field.
std::string report_to_string(const nlohmann::json& report);

// Prints the report to stdout and, if out_path is non-empty, writes it
// there as well. I/O failures raise ConfigError.
void emit_report(const nlohmann::json& report, const std::string& out_path);

}  // namespace ercd
