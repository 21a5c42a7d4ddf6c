#include "cosmicsusy/cli/series_table.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "cosmicsusy/errors.hpp"

namespace cosmicsusy::cli {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    return std::isfinite(*d) ? format_number(*d) : std::string();
  }
  return csv_field(std::get<std::string>(c));
}

}  // namespace

void SeriesTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw ShapeError("SeriesTable: row has " + std::to_string(row.size()) +
                     " cells, expected " + std::to_string(columns.size()));
  rows.push_back(std::move(row));
}

void SeriesTable::set_meta(const std::string& key, const std::string& value) {
  for (auto& [k, v] : metadata) {
    if (k == key) {
      v = value;
      return;
    }
  }
  metadata.emplace_back(key, value);
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_compact(double v) {
  char buf[40];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

Format format_from_path(const std::filesystem::path& path) {
  return path.extension() == ".json" ? Format::Json : Format::Csv;
}

std::optional<Format> parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  return std::nullopt;
}

std::string to_csv(const SeriesTable& t) {
  std::string out;
  for (const auto& [k, v] : t.metadata) out += "# " + k + "=" + v + "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_field(t.columns[i]);
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += cell_text(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const SeriesTable& t) {
  nlohmann::ordered_json doc;
  doc["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.metadata) doc["metadata"][k] = v;
  doc["columns"] = t.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& c : row) {
      if (const auto* d = std::get_if<double>(&c)) {
        if (std::isfinite(*d))
          r.push_back(*d);
        else
          r.push_back(nullptr);
      } else {
        r.push_back(std::get<std::string>(c));
      }
    }
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(1) + "\n";
}

std::string render(const SeriesTable& t, Format f) {
  return f == Format::Json ? to_json(t) : to_csv(t);
}

void write_table(const SeriesTable& t, const std::filesystem::path& path,
                 std::optional<Format> f) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot open " + path.string() + " for writing");
  os << render(t, f.value_or(format_from_path(path)));
  if (!os) throw Error("write to " + path.string() + " failed");
}

}  // namespace cosmicsusy::cli
