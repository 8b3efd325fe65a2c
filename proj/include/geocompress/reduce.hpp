#pragma once

#include <cmath>
#include <cstdio>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "geocompress/dataset.hpp"
#include "geocompress/dbscan.hpp"
#include "geocompress/error.hpp"
#include "geocompress/geo.hpp"

namespace geocompress {

/// The representative row of one cluster, copied from the input.
struct ReducedRecord {
  std::int32_t cluster_label = 0;
  std::size_t cluster_size = 0;
  std::size_t row_index = 0;
  GeoPoint point;
  std::vector<std::string> values;  // schema order, verbatim

  friend bool operator==(const ReducedRecord&, const ReducedRecord&) = default;
};

struct ReducedDataset {
  Schema schema;
  std::vector<ReducedRecord> records;  // one per cluster, by label
  std::size_t original_count = 0;
  std::size_t noise_count = 0;
};

struct CompressionReport {
  std::size_t original_count = 0;
  std::size_t reduced_count = 0;
  double compression_pct = 0.0;
};

/// Arithmetic mean of latitudes and of longitudes, taken in degree space.
/// This is a planar centroid: near the antimeridian or the poles it does not
/// match the spherical center, and for non-convex clusters it may lie outside
/// the cluster.
[[nodiscard]] inline GeoPoint centroid(std::span<const GeoPoint> members) {
  if (members.empty()) throw InvalidArgument("centroid of an empty cluster");
  double lat = 0.0;
  double lon = 0.0;
  for (const auto& p : members) {
    lat += p.lat_deg;
    lon += p.lon_deg;
  }
  const auto n = static_cast<double>(members.size());
  return {lat / n, lon / n};
}

/// Row of the member nearest (great-circle meters) to the cluster centroid.
/// Ties go to the lowest row index.
[[nodiscard]] inline std::size_t centermost_point(const Cluster& cluster,
                                                  const Dataset& dataset) {
  if (cluster.member_rows.empty()) {
    throw InvalidArgument("centermost point of an empty cluster");
  }
  std::vector<GeoPoint> members;
  members.reserve(cluster.member_rows.size());
  for (std::size_t row : cluster.member_rows) {
    members.push_back(dataset[row].point);
  }
  const GeoPoint center = centroid(members);

  std::size_t best_row = cluster.member_rows.front();
  double best_m = great_circle_m(members.front(), center);
  for (std::size_t k = 1; k < members.size(); ++k) {
    const double m = great_circle_m(members[k], center);
    const std::size_t row = cluster.member_rows[k];
    if (m < best_m || (m == best_m && row < best_row)) {
      best_m = m;
      best_row = row;
    }
  }
  return best_row;
}

/// One record per cluster, carrying the full original row of its centermost
/// member. Noise rows are dropped and counted.
[[nodiscard]] inline ReducedDataset reduce_dataset(const Dataset& dataset,
                                                   const ClusterLabels& labels) {
  if (labels.size() != dataset.size()) {
    throw InvalidArgument("labels do not align with dataset rows");
  }
  ReducedDataset out;
  out.schema = dataset.schema();
  out.original_count = dataset.size();
  out.noise_count = labels.noise_count();

  const auto clusters = group_clusters(labels);
  out.records.reserve(clusters.size());
  for (const auto& cluster : clusters) {
    if (cluster.member_rows.empty()) continue;
    const std::size_t row = centermost_point(cluster, dataset);
    const Record& src = dataset[row];
    out.records.push_back({cluster.label, cluster.member_rows.size(), row,
                           src.point, src.values});
  }
  return out;
}

[[nodiscard]] inline CompressionReport compression_report(
    std::size_t original_count, std::size_t reduced_count) {
  if (original_count < 1 || reduced_count > original_count) {
    throw InvalidArgument("compression report needs original >= reduced, original >= 1");
  }
  return {original_count, reduced_count,
          100.0 * (1.0 - static_cast<double>(reduced_count) /
                             static_cast<double>(original_count))};
}

/// Percentage rounded to one decimal, e.g. "92.2".
[[nodiscard]] inline std::string format_pct(double pct) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", pct);
  return buf;
}

}  // namespace geocompress
