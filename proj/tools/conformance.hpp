#pragma once

#include <string>
#include <vector>

namespace triquad {

/// One conformance check. `status` is "pass", "fail" or "paper-discrepancy"
/// (a reproducible difference between the derived value and the published
/// source table, reported distinctly and not counted as a failure).
/// `provenance` records what the check compares against: "golden-table"
/// (embedded golden data / quoted values) or "property" (an internal
/// mathematical identity).
struct ConformanceCheck {
  std::string name;
  std::string scope;  // cohomology | invariants | tables | classifiers | delpezzo | properties
  std::string provenance;
  std::string status;
  std::string detail;
};

struct ConformanceReport {
  std::vector<ConformanceCheck> checks;
  int passed = 0;
  int failed = 0;
  int discrepancies = 0;

  bool ok() const { return failed == 0; }
};

/// Run every check, or only those whose scope equals `only` when non-empty.
/// Reads the golden CSVs from `dir`.
ConformanceReport run_conformance(const std::string& dir, const std::string& only = "");

}  // namespace triquad
