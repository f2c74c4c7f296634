#pragma once

// Command implementations behind the `hermcode` executable. Each command
// returns a JSON report and an exit code; nothing here writes to stdout.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hermcode/bounds.hpp"
#include "hermcode/errors.hpp"
#include "hermcode/forms.hpp"

namespace hermcode::cli {

enum ExitCode : int { kPass = 0, kInvariantFailure = 1, kBudgetRefusal = 2, kUnknownBound = 3 };

enum class VarietyKind { Cone, Nondegenerate, Space };

struct RunConfig {
  std::uint32_t p = 2, e = 1;
  std::size_t n = 2, d = 1;
  VarietyKind variety = VarietyKind::Cone;
  std::uint64_t point_budget = kDefaultPointBudget;
  std::uint64_t evaluation_budget = kDefaultEvaluationBudget;
  std::uint64_t message_budget = kDefaultMessageBudget;
  Shard shard;
  bool assume_conjecture = false;
  std::uint64_t seed = 1;
  std::size_t threads = 1;
  std::string suite = "all";
  std::string what = "points";  // export target: points, generator, weights
  std::vector<std::string> inputs;
};

struct CommandResult {
  nlohmann::json report;
  int exit_code = kPass;
  std::string text;  // non-JSON payload (CSV or generator file) for export
};

/// Throws std::invalid_argument for an unusable configuration (bad shard, d > q, ...).
void validate(const RunConfig& config);

CommandResult cmd_params(const RunConfig& config);
CommandResult cmd_verify(const RunConfig& config);
CommandResult cmd_oracle(const RunConfig& config);
CommandResult cmd_merge(const RunConfig& config);
CommandResult cmd_construct(const RunConfig& config);
CommandResult cmd_export(const RunConfig& config);

/// Full oracle report for a result over the configured variety; characterization
/// is computed only when the result covers the whole form space.
nlohmann::json oracle_report(const RunConfig& config, const OracleResult& result);

/// Deterministic serialization used for every report.
std::string dump_report(const nlohmann::json& report);

const char* to_string(VarietyKind k) noexcept;
VarietyKind parse_variety(const std::string& s);
Shard parse_shard(const std::string& s);

/// Parses argv and runs the selected command. Returns the process exit code.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace hermcode::cli
