#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace deckforge::cli {

struct SuiteRow {
  std::string suite;
  std::string label;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  /// Description of the first failing case, empty when all pass.
  std::string first_failure;
};

std::vector<std::string> suite_names();

/// Runs a named invariant suite up to `max_vertices` (0 selects the suite's
/// default). "all" runs every suite with its default. Unknown names throw
/// InvalidParameter.
std::vector<SuiteRow> run_suite(const std::string& name, int max_vertices, int jobs);

}  // namespace deckforge::cli
