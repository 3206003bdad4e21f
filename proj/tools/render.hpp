#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace triquad {

enum class Format { Csv, Json, Md };

/// Tabular payload: cells are JSON scalars so the csv/md renderers can print
/// them untyped while the json renderer keeps their types.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::ordered_json>> rows;
};

std::string csv_escape(const std::string& field);

/// csv: RFC-4180, header + rows. md: aligned pipe table. json: array of
/// objects keyed by column (unless `json_override` is non-null, which is
/// emitted verbatim -- used where the natural JSON shape is not a row array).
void print_table(std::ostream& os, const Table& table, Format format,
                 const nlohmann::ordered_json* json_override = nullptr);

/// --format flag value ("", "csv", "json", "md") to a format, defaulting to
/// md on a terminal and csv otherwise. Returns false for unknown names.
bool resolve_format(const std::string& flag, Format& out);

}  // namespace triquad
