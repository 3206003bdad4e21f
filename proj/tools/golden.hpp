#pragma once

#include <string>
#include <vector>

#include "triquad/enumerate.hpp"

namespace triquad {

/// Embedded golden tables: authored once as CSV data files, in the published
/// visual order. The enumeration engines never read them; only the
/// conformance runner compares against them.

struct GoldenDivisorialRow {
  DivisorClass alpha;
  DivisorClass delta;
  int e = 0;
  CurveClass beta;
  CurveClass classE;
  std::string verdict;
};

struct GoldenIntermediateRow {
  char label = '?';
  DivisorClass alpha;
  CurveClass beta;
  std::int64_t deg = 0;
  std::int64_t pa = 0;
  std::string verdict;
};

/// Directory holding the golden CSVs: $TRIQUAD_GOLDEN_DIR when set, else the
/// build-time default.
std::string golden_dir();

std::vector<GoldenDivisorialRow> load_golden_divisorial(const std::string& dir);
std::vector<GoldenIntermediateRow> load_golden_intermediate(const std::string& dir);

/// Minimal RFC-4180 CSV splitting for one line (quotes and embedded commas).
std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace triquad
