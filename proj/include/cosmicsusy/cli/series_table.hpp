#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cosmicsusy::cli {

// A numeric cell or a label. Non-finite numbers are gaps.
using Cell = std::variant<double, std::string>;

struct SeriesTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, std::string>> metadata;

  // Throws ShapeError unless the row has one cell per column.
  void add_row(std::vector<Cell> row);
  void set_meta(const std::string& key, const std::string& value);
};

enum class Format { Csv, Json };

// ".json" selects Json, anything else Csv.
Format format_from_path(const std::filesystem::path& path);
std::optional<Format> parse_format(const std::string& name);

// Header row, '#'-prefixed metadata lines before it, %.17g numbers, gaps as
// empty fields, LF line endings.
std::string to_csv(const SeriesTable& t);
// {"metadata": {...}, "columns": [...], "rows": [[...], ...]}, gaps as null.
std::string to_json(const SeriesTable& t);

std::string render(const SeriesTable& t, Format f);
void write_table(const SeriesTable& t, const std::filesystem::path& path,
                 std::optional<Format> f = std::nullopt);

// "%.17g" text, used for every numeric cell.
std::string format_number(double v);
// Shortest text that reads back to the same double, for labels and echoes.
std::string format_compact(double v);

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace cosmicsusy::cli
