#include "render.hpp"

#include <algorithm>

#ifdef _WIN32
#include <io.h>
#define TRIQUAD_ISATTY _isatty
#define TRIQUAD_FILENO _fileno
#else
#include <unistd.h>
#define TRIQUAD_ISATTY isatty
#define TRIQUAD_FILENO fileno
#endif

#include <cstdio>

namespace triquad {

namespace {

std::string cell_text(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

void print_table(std::ostream& os, const Table& table, Format format,
                 const nlohmann::ordered_json* json_override) {
  if (format == Format::Json) {
    if (json_override) {
      os << json_override->dump() << "\n";
      return;
    }
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      nlohmann::ordered_json obj;
      for (std::size_t i = 0; i < table.columns.size(); ++i) obj[table.columns[i]] = row[i];
      arr.push_back(std::move(obj));
    }
    os << arr.dump() << "\n";
    return;
  }

  if (format == Format::Csv) {
    for (std::size_t i = 0; i < table.columns.size(); ++i)
      os << (i ? "," : "") << csv_escape(table.columns[i]);
    os << "\n";
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        os << (i ? "," : "") << csv_escape(cell_text(row[i]));
      os << "\n";
    }
    return;
  }

  // Markdown: aligned pipes.
  std::vector<std::size_t> width(table.columns.size());
  for (std::size_t i = 0; i < table.columns.size(); ++i) width[i] = table.columns[i].size();
  std::vector<std::vector<std::string>> text;
  for (const auto& row : table.rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line.push_back(cell_text(row[i]));
      width[i] = std::max(width[i], line.back().size());
    }
    text.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    os << "|";
    for (std::size_t i = 0; i < line.size(); ++i) {
      os << " " << line[i] << std::string(width[i] - line[i].size(), ' ') << " |";
    }
    os << "\n";
  };
  emit(table.columns);
  std::vector<std::string> rule;
  for (const std::size_t w : width) rule.push_back(std::string(w, '-'));
  emit(rule);
  for (const auto& line : text) emit(line);
}

bool resolve_format(const std::string& flag, Format& out) {
  if (flag.empty()) {
    out = TRIQUAD_ISATTY(TRIQUAD_FILENO(stdout)) ? Format::Md : Format::Csv;
    return true;
  }
  if (flag == "csv") out = Format::Csv;
  else if (flag == "json") out = Format::Json;
  else if (flag == "md") out = Format::Md;
  else return false;
  return true;
}

}  // namespace triquad
