#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <span>
#include <vector>

#include "geocompress/ball_tree.hpp"
#include "geocompress/error.hpp"
#include "geocompress/geo.hpp"

namespace geocompress {

inline constexpr std::int32_t kNoise = -1;

/// Neighborhood radius in kilometers and minimum neighborhood size (the
/// point itself counts toward it).
struct DbscanParams {
  double eps_km = 1.5;
  std::size_t min_samples = 1;

  void validate() const {
    if (!std::isfinite(eps_km) || eps_km <= 0.0) {
      throw InvalidArgument("eps_km must be finite and > 0");
    }
    if (min_samples < 1) throw InvalidArgument("min_samples must be >= 1");
  }
};

/// Per-row cluster labels in input order. Clusters are numbered 0..k-1;
/// noise rows carry kNoise.
struct ClusterLabels {
  std::vector<std::int32_t> labels;
  std::size_t num_clusters = 0;

  [[nodiscard]] std::size_t size() const noexcept { return labels.size(); }
  [[nodiscard]] std::size_t noise_count() const noexcept {
    return static_cast<std::size_t>(
        std::count(labels.begin(), labels.end(), kNoise));
  }
};

struct Cluster {
  std::int32_t label = 0;
  std::vector<std::size_t> member_rows;  // ascending
};

/// Density-based clustering over the haversine metric.
///
/// Seeds are scanned in ascending row order and each cluster is grown
/// breadth-first to completion before the next seed is considered, so a
/// border point reachable from several clusters belongs to the one with the
/// lowest label. Each point's neighborhood is queried at most once.
[[nodiscard]] inline ClusterLabels run_dbscan(std::span<const RadianPoint> points,
                                              const DbscanParams& params,
                                              const MetricIndex& index) {
  params.validate();
  if (!index.matches(points)) {
    throw InvalidArgument("index does not match point set");
  }

  constexpr std::int32_t kUnvisited = -2;
  const double eps_rad = km_to_arc(params.eps_km);
  const std::size_t n = points.size();

  ClusterLabels result;
  result.labels.assign(n, kUnvisited);
  auto& labels = result.labels;

  std::vector<std::size_t> neighbors;
  std::deque<std::size_t> frontier;
  std::int32_t next_label = 0;

  auto query = [&](std::size_t row) {
    neighbors.clear();
    index.radius_query(points[row], eps_rad, neighbors);
    std::sort(neighbors.begin(), neighbors.end());
  };

  for (std::size_t seed = 0; seed < n; ++seed) {
    if (labels[seed] != kUnvisited) continue;
    query(seed);
    if (neighbors.size() < params.min_samples) {
      labels[seed] = kNoise;
      continue;
    }

    const std::int32_t label = next_label++;
    labels[seed] = label;
    auto claim = [&] {
      for (std::size_t q : neighbors) {
        if (labels[q] == kUnvisited) {
          labels[q] = label;
          frontier.push_back(q);
        } else if (labels[q] == kNoise) {
          // Already known to be non-core: becomes a border point.
          labels[q] = label;
        }
      }
    };
    claim();
    while (!frontier.empty()) {
      const std::size_t q = frontier.front();
      frontier.pop_front();
      query(q);
      if (neighbors.size() >= params.min_samples) claim();
    }
  }

  result.num_clusters = static_cast<std::size_t>(next_label);
  return result;
}

/// One Cluster per non-noise label, in label order.
[[nodiscard]] inline std::vector<Cluster> group_clusters(
    const ClusterLabels& labels) {
  std::int32_t max_label = -1;
  for (std::int32_t l : labels.labels) max_label = std::max(max_label, l);

  std::vector<Cluster> clusters(static_cast<std::size_t>(max_label + 1));
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    clusters[i].label = static_cast<std::int32_t>(i);
  }
  for (std::size_t row = 0; row < labels.labels.size(); ++row) {
    const std::int32_t l = labels.labels[row];
    if (l >= 0) clusters[static_cast<std::size_t>(l)].member_rows.push_back(row);
  }
  return clusters;
}

}  // namespace geocompress
