#pragma once

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>

#include "geocompress/csv.hpp"
#include "geocompress/dataset.hpp"
#include "geocompress/reduce.hpp"

namespace geocompress {

struct ScatterStyle {
  double width = 1200.0;
  double height = 600.0;
  double margin_frac = 0.05;
  double original_radius = 1.5;
  double reduced_radius = 4.0;
  const char* original_fill = "#1a1a1a";
  const char* reduced_fill = "#7ddc7d";
  const char* reduced_stroke = "#2e7d32";
};

/// Before/after scatter plot as a standalone SVG 1.1 document.
///
/// Equirectangular: x follows longitude, y follows negated latitude, each axis
/// scaled linearly so the original points' bounding box fills the viewport
/// inside the margins. Original points are drawn first as small dark dots,
/// reduced points on top as larger green dots. Every marker is one <circle>.
[[nodiscard]] inline std::string format_scatter_svg(
    const Dataset& original, const ReducedDataset& reduced,
    const ScatterStyle& style = {}) {
  double min_lat = 90.0, max_lat = -90.0, min_lon = 180.0, max_lon = -180.0;
  auto extend = [&](const GeoPoint& p) {
    min_lat = std::min(min_lat, p.lat_deg);
    max_lat = std::max(max_lat, p.lat_deg);
    min_lon = std::min(min_lon, p.lon_deg);
    max_lon = std::max(max_lon, p.lon_deg);
  };
  for (const auto& r : original.records()) extend(r.point);
  for (const auto& r : reduced.records) extend(r.point);

  const double mx = style.width * style.margin_frac;
  const double my = style.height * style.margin_frac;
  const double inner_w = style.width - 2 * mx;
  const double inner_h = style.height - 2 * my;
  const double span_lon = max_lon - min_lon;
  const double span_lat = max_lat - min_lat;

  auto project = [&](const GeoPoint& p) {
    const double x = span_lon > 0 ? mx + (p.lon_deg - min_lon) / span_lon * inner_w
                                  : style.width / 2;
    const double y = span_lat > 0 ? my + (max_lat - p.lat_deg) / span_lat * inner_h
                                  : style.height / 2;
    return std::pair{x, y};
  };

  std::ostringstream os;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
                "width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                style.width, style.height, style.width, style.height);
  os << buf;
  os << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  os << "<g id=\"original\" fill=\"" << style.original_fill << "\">\n";
  for (const auto& r : original.records()) {
    const auto [x, y] = project(r.point);
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.1f\"/>\n",
                  x, y, style.original_radius);
    os << buf;
  }
  os << "</g>\n";

  os << "<g id=\"reduced\" fill=\"" << style.reduced_fill << "\" stroke=\""
     << style.reduced_stroke << "\" stroke-width=\"1\">\n";
  for (const auto& r : reduced.records) {
    const auto [x, y] = project(r.point);
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.1f\"/>\n",
                  x, y, style.reduced_radius);
    os << buf;
  }
  os << "</g>\n</svg>\n";
  return std::move(os).str();
}

inline void emit_scatter_svg(const Dataset& original, const ReducedDataset& reduced,
                             const std::filesystem::path& path) {
  csv::write_file(path, format_scatter_svg(original, reduced));
}

}  // namespace geocompress
