#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geocompress/geo.hpp"

namespace geocompress {

/// Column layout of a point table.
struct Schema {
  std::vector<std::string> column_names;
  std::size_t lat_index = 0;
  std::size_t lon_index = 1;

  [[nodiscard]] std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < column_names.size(); ++i) {
      if (column_names[i] == name) return i;
    }
    return std::nullopt;
  }

  [[nodiscard]] bool is_coordinate(std::size_t column) const noexcept {
    return column == lat_index || column == lon_index;
  }

  friend bool operator==(const Schema&, const Schema&) = default;
};

/// One input row. `values` holds every column's text in schema order; the
/// coordinate columns hold the text they were parsed from. Everything that
/// is not a coordinate is an opaque attribute string.
struct Record {
  std::size_t row_index = 0;
  GeoPoint point;
  std::vector<std::string> values;

  friend bool operator==(const Record&, const Record&) = default;
};

/// Validated rows in file order; row_index is 0..N-1.
class Dataset {
 public:
  Dataset() = default;
  Dataset(Schema schema, std::vector<Record> records)
      : schema_(std::move(schema)), records_(std::move(records)) {}

  [[nodiscard]] const Schema& schema() const noexcept { return schema_; }
  [[nodiscard]] const std::vector<Record>& records() const noexcept {
    return records_;
  }
  [[nodiscard]] std::size_t size() const noexcept { return records_.size(); }
  [[nodiscard]] bool empty() const noexcept { return records_.empty(); }
  [[nodiscard]] const Record& operator[](std::size_t row) const {
    return records_[row];
  }

  [[nodiscard]] const std::string& lat_col() const {
    return schema_.column_names[schema_.lat_index];
  }
  [[nodiscard]] const std::string& lon_col() const {
    return schema_.column_names[schema_.lon_index];
  }

  /// Attribute text of `row` for a non-coordinate column, if it exists.
  [[nodiscard]] std::optional<std::string_view> attribute(
      std::size_t row, std::string_view column) const {
    const auto col = schema_.find(column);
    if (!col || schema_.is_coordinate(*col)) return std::nullopt;
    return std::string_view(records_[row].values[*col]);
  }

  [[nodiscard]] std::vector<GeoPoint> points() const {
    std::vector<GeoPoint> out;
    out.reserve(records_.size());
    for (const auto& r : records_) out.push_back(r.point);
    return out;
  }

  [[nodiscard]] std::vector<RadianPoint> radian_points() const {
    std::vector<RadianPoint> out;
    out.reserve(records_.size());
    for (const auto& r : records_) out.push_back(to_radians(r.point));
    return out;
  }

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  Schema schema_;
  std::vector<Record> records_;
};

}  // namespace geocompress
