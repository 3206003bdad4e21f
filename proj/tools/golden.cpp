#include "golden.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#ifndef TRIQUAD_DEFAULT_GOLDEN_DIR
#define TRIQUAD_DEFAULT_GOLDEN_DIR "."
#endif

namespace triquad {

std::string golden_dir() {
  if (const char* env = std::getenv("TRIQUAD_GOLDEN_DIR"); env && *env) return env;
  return TRIQUAD_DEFAULT_GOLDEN_DIR;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

namespace {

std::vector<std::vector<std::string>> read_csv(const std::string& path,
                                               std::size_t expect_fields) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden file: " + path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    if (header) {
      header = false;
      continue;
    }
    auto fields = split_csv_line(line);
    if (fields.size() != expect_fields)
      throw std::runtime_error("malformed golden row in " + path + ": " + line);
    rows.push_back(std::move(fields));
  }
  return rows;
}

std::int64_t to_i64(const std::string& s) { return std::stoll(s); }

}  // namespace

std::vector<GoldenDivisorialRow> load_golden_divisorial(const std::string& dir) {
  std::vector<GoldenDivisorialRow> out;
  for (const auto& f : read_csv(dir + "/divisorial_table.csv", 14)) {
    GoldenDivisorialRow r;
    r.alpha = {to_i64(f[0]), to_i64(f[1]), to_i64(f[2])};
    r.delta = {to_i64(f[3]), to_i64(f[4]), to_i64(f[5])};
    r.e = static_cast<int>(to_i64(f[6]));
    r.beta = {to_i64(f[7]), to_i64(f[8]), to_i64(f[9])};
    r.classE = {to_i64(f[10]), to_i64(f[11]), to_i64(f[12])};
    r.verdict = f[13];
    out.push_back(r);
  }
  return out;
}

std::vector<GoldenIntermediateRow> load_golden_intermediate(const std::string& dir) {
  std::vector<GoldenIntermediateRow> out;
  for (const auto& f : read_csv(dir + "/intermediate_table.csv", 10)) {
    GoldenIntermediateRow r;
    if (f[0].size() != 1) throw std::runtime_error("bad label: " + f[0]);
    r.label = f[0][0];
    r.alpha = {to_i64(f[1]), to_i64(f[2]), to_i64(f[3])};
    r.beta = {to_i64(f[4]), to_i64(f[5]), to_i64(f[6])};
    r.deg = to_i64(f[7]);
    r.pa = to_i64(f[8]);
    r.verdict = f[9];
    out.push_back(r);
  }
  return out;
}

}  // namespace triquad
