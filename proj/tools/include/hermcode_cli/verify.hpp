#pragma once

// Named invariant checks grouped into suites.

#include <string>
#include <vector>

#include "hermcode_cli/commands.hpp"

namespace hermcode::cli {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<Check> suite_field(const RunConfig& config);
std::vector<Check> suite_proj(const RunConfig& config);
std::vector<Check> suite_hermitian(const RunConfig& config);
std::vector<Check> suite_forms(const RunConfig& config);
std::vector<Check> suite_codes(const RunConfig& config);
std::vector<Check> suite_bounds(const RunConfig& config);
/// Vertex-avoiding hyperplane sections of maximal threefolds on the cone in P⁴.
std::vector<Check> suite_threefold_sections(const RunConfig& config);

/// Suite names accepted by `verify --suite`.
const std::vector<std::string>& suite_names();
std::vector<Check> run_suite(const std::string& name, const RunConfig& config);

}  // namespace hermcode::cli
