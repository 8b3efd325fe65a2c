#pragma once

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "geocompress/dataset.hpp"
#include "geocompress/error.hpp"
#include "geocompress/geo.hpp"
#include "geocompress/reduce.hpp"

namespace geocompress {

inline constexpr std::string_view kClusterLabelColumn = "cluster_label";
inline constexpr std::string_view kClusterSizeColumn = "cluster_size";

namespace csv {

/// Splits RFC-4180 text into records of fields. Accepts LF or CRLF line
/// endings, quoted fields with embedded separators, quotes ("") and line
/// breaks, and a leading UTF-8 BOM. Blank lines are skipped. Each record is
/// tagged with the 1-based physical line it starts on.
struct RawRecord {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

[[nodiscard]] inline std::vector<RawRecord> parse(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<RawRecord> out;
  RawRecord rec;
  std::string field;
  bool in_quotes = false;
  bool field_quoted = false;
  bool record_started = false;
  std::size_t line = 1;
  rec.line = 1;

  auto end_field = [&] {
    rec.fields.push_back(std::move(field));
    field.clear();
    field_quoted = false;
  };
  auto end_record = [&] {
    if (record_started) {
      end_field();
      out.push_back(std::move(rec));
    }
    rec = RawRecord{};
    record_started = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty() || field_quoted) {
          throw InputError("line " + std::to_string(line) +
                           ": unexpected quote inside field");
        }
        if (!record_started) rec.line = line;
        record_started = true;
        in_quotes = true;
        field_quoted = true;
        break;
      case ',':
        if (!record_started) rec.line = line;
        record_started = true;
        end_field();
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;
        field.push_back(c);
        break;
      case '\n':
        end_record();
        ++line;
        break;
      default:
        if (field_quoted) {
          throw InputError("line " + std::to_string(line) +
                           ": characters after closing quote");
        }
        if (!record_started) rec.line = line;
        record_started = true;
        field.push_back(c);
    }
  }
  if (in_quotes) throw InputError("unterminated quoted field");
  end_record();
  return out;
}

[[nodiscard]] inline bool needs_quotes(std::string_view field) {
  return field.find_first_of(",\"\r\n") != std::string_view::npos;
}

inline void write_field(std::ostream& os, std::string_view field) {
  if (!needs_quotes(field)) {
    os << field;
    return;
  }
  os << '"';
  for (char c : field) {
    if (c == '"') os << '"';
    os << c;
  }
  os << '"';
}

inline void write_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) os << ',';
    write_field(os, fields[i]);
  }
  os << '\n';
}

/// Shortest decimal text that parses back to the same double.
[[nodiscard]] inline std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

[[nodiscard]] inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

[[nodiscard]] inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "' for reading: " +
                  std::generic_category().message(errno));
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path.string() + "'");
  return std::move(ss).str();
}

inline void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing: " +
                  std::generic_category().message(errno));
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) {
    throw IoError("error writing '" + path.string() + "': " +
                  std::generic_category().message(errno));
  }
}

}  // namespace csv

/// Parses a point table from CSV text. The header row is required; `lat_col`
/// and `lon_col` name the decimal-degree coordinate columns. Errors name the
/// 1-based data row they occur on.
[[nodiscard]] inline Dataset parse_dataset(std::string_view text,
                                           std::string_view lat_col = "lat",
                                           std::string_view lon_col = "lon") {
  auto raw = csv::parse(text);
  if (raw.empty()) throw InputError("missing header row");

  Schema schema;
  schema.column_names = std::move(raw.front().fields);
  for (std::size_t i = 0; i < schema.column_names.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (schema.column_names[i] == schema.column_names[j]) {
        throw InputError("duplicate column '" + schema.column_names[i] + "'");
      }
    }
  }
  const auto lat = schema.find(lat_col);
  if (!lat) throw InputError("missing latitude column '" + std::string(lat_col) + "'");
  const auto lon = schema.find(lon_col);
  if (!lon) throw InputError("missing longitude column '" + std::string(lon_col) + "'");
  if (*lat == *lon) throw InputError("latitude and longitude columns must differ");
  schema.lat_index = *lat;
  schema.lon_index = *lon;

  if (raw.size() < 2) throw InputError("no data rows");

  std::vector<Record> records;
  records.reserve(raw.size() - 1);
  for (std::size_t r = 1; r < raw.size(); ++r) {
    const std::size_t row_no = r;  // 1-based data row
    auto& fields = raw[r].fields;
    if (fields.size() != schema.column_names.size()) {
      throw InputError("row " + std::to_string(row_no) + ": expected " +
                       std::to_string(schema.column_names.size()) +
                       " fields, found " + std::to_string(fields.size()));
    }
    auto parse_coord = [&](std::size_t col, double lo, double hi) {
      const std::string_view text = csv::trim(fields[col]);
      double v = 0.0;
      const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
      if (text.empty() || res.ec != std::errc{} ||
          res.ptr != text.data() + text.size()) {
        throw InputError("row " + std::to_string(row_no) + ": cannot parse " +
                         schema.column_names[col] + " value '" + fields[col] + "'");
      }
      if (!std::isfinite(v) || v < lo || v > hi) {
        throw InputError("row " + std::to_string(row_no) + ": " +
                         schema.column_names[col] + " value " + fields[col] +
                         " out of range [" + csv::format_double(lo) + ", " +
                         csv::format_double(hi) + "]");
      }
      return v;
    };
    const double lat_v = parse_coord(schema.lat_index, -90.0, 90.0);
    const double lon_v = parse_coord(schema.lon_index, -180.0, 180.0);
    records.push_back({r - 1, GeoPoint{lat_v, lon_v}, std::move(fields)});
  }
  return Dataset(std::move(schema), std::move(records));
}

[[nodiscard]] inline Dataset read_csv(const std::filesystem::path& path,
                                      std::string_view lat_col = "lat",
                                      std::string_view lon_col = "lon") {
  try {
    return parse_dataset(csv::read_file(path), lat_col, lon_col);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

namespace csv {

inline std::vector<std::string> output_fields(const Schema& schema,
                                              const GeoPoint& point,
                                              const std::vector<std::string>& values) {
  std::vector<std::string> fields = values;
  fields[schema.lat_index] = format_double(point.lat_deg);
  fields[schema.lon_index] = format_double(point.lon_deg);
  return fields;
}

}  // namespace csv

/// Serializes a dataset with its original columns. Coordinates are written in
/// shortest round-trip form so they parse back to identical doubles.
[[nodiscard]] inline std::string format_dataset(const Dataset& dataset) {
  std::ostringstream os;
  csv::write_row(os, dataset.schema().column_names);
  for (const auto& rec : dataset.records()) {
    csv::write_row(os, csv::output_fields(dataset.schema(), rec.point, rec.values));
  }
  return std::move(os).str();
}

/// Original columns in original order, then cluster_label and cluster_size.
[[nodiscard]] inline std::string format_reduced(const ReducedDataset& reduced) {
  const Schema& schema = reduced.schema;
  for (std::string_view extra : {kClusterLabelColumn, kClusterSizeColumn}) {
    if (schema.find(extra)) {
      throw InvalidArgument("input already has a column named '" +
                            std::string(extra) + "'");
    }
  }
  std::ostringstream os;
  auto header = schema.column_names;
  header.emplace_back(kClusterLabelColumn);
  header.emplace_back(kClusterSizeColumn);
  csv::write_row(os, header);
  for (const auto& rec : reduced.records) {
    auto fields = csv::output_fields(schema, rec.point, rec.values);
    fields.push_back(std::to_string(rec.cluster_label));
    fields.push_back(std::to_string(rec.cluster_size));
    csv::write_row(os, fields);
  }
  return std::move(os).str();
}

inline void write_csv(const ReducedDataset& reduced,
                      const std::filesystem::path& path) {
  csv::write_file(path, format_reduced(reduced));
}

inline void write_dataset(const Dataset& dataset,
                          const std::filesystem::path& path) {
  csv::write_file(path, format_dataset(dataset));
}

}  // namespace geocompress
