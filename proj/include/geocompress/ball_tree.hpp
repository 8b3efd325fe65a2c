#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "geocompress/error.hpp"
#include "geocompress/geo.hpp"

namespace geocompress {

/// Exact radius search by linear scan. Serves as the reference for the
/// ball tree and as the faster option for very small inputs.
class LinearScanIndex {
 public:
  explicit LinearScanIndex(std::vector<RadianPoint> points)
      : points_(std::move(points)) {
    if (points_.empty()) throw InvalidArgument("empty point set");
  }

  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }

  /// Appends every row within `radius_rad` (inclusive) of `center`, ascending.
  void radius_query(const RadianPoint& center, double radius_rad,
                    std::vector<std::size_t>& out) const {
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (arc_distance(points_[i], center) <= radius_rad) out.push_back(i);
    }
  }

  [[nodiscard]] std::vector<std::size_t> radius_query(
      const RadianPoint& center, double radius_rad) const {
    std::vector<std::size_t> out;
    radius_query(center, radius_rad, out);
    return out;
  }

 private:
  std::vector<RadianPoint> points_;
};

/// Ball tree over radian coordinates with the haversine arc metric.
///
/// Nodes own a contiguous slice of the permuted point array. Each node keeps a
/// pivot (spherical mean of its points) and the largest arc distance from the
/// pivot to any of them. Radius queries are exact: the pruning tests only
/// decide which leaves to scan, and every reported row passes the same
/// `arc_distance(point, center) <= radius` comparison a linear scan uses.
///
/// Immutable after construction; concurrent queries need no synchronization.
class BallTree {
 public:
  static constexpr std::size_t kDefaultLeafCapacity = 32;
  /// Inputs smaller than this are kept in a single leaf.
  static constexpr std::size_t kLinearScanThreshold = 64;

  struct Node {
    RadianPoint pivot;
    double radius = 0.0;  // arc radians
    std::uint32_t begin = 0;
    std::uint32_t end = 0;
    std::int32_t left = -1;
    std::int32_t right = -1;

    [[nodiscard]] bool is_leaf() const noexcept { return left < 0; }
  };

  explicit BallTree(std::span<const RadianPoint> points,
                    std::size_t leaf_capacity = kDefaultLeafCapacity)
      : leaf_capacity_(std::max<std::size_t>(leaf_capacity, 1)) {
    if (points.empty()) throw InvalidArgument("empty point set");
    if (points.size() > UINT32_MAX) throw InvalidArgument("too many points");
    points_.assign(points.begin(), points.end());
    rows_.resize(points.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      rows_[i] = static_cast<std::uint32_t>(i);
    }
    nodes_.reserve(2 * (points.size() / leaf_capacity_ + 1));
    const bool tiny = points.size() < kLinearScanThreshold;
    build(0, static_cast<std::uint32_t>(points.size()), tiny);
  }

  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
  [[nodiscard]] std::size_t leaf_capacity() const noexcept {
    return leaf_capacity_;
  }

  /// Nodes in construction order; index 0 is the root.
  [[nodiscard]] std::span<const Node> nodes() const noexcept { return nodes_; }
  /// Points in tree order (node slices index into this).
  [[nodiscard]] std::span<const RadianPoint> tree_points() const noexcept {
    return points_;
  }
  /// Original row index of each tree-order point.
  [[nodiscard]] std::span<const std::uint32_t> tree_rows() const noexcept {
    return rows_;
  }

  /// True when the tree was built from exactly `points`, in this order.
  [[nodiscard]] bool matches(std::span<const RadianPoint> points) const {
    if (points.size() != points_.size()) return false;
    for (std::size_t k = 0; k < points_.size(); ++k) {
      if (!(points[rows_[k]] == points_[k])) return false;
    }
    return true;
  }

  /// Appends (unordered) every original row within `radius_rad` of `center`.
  void radius_query(const RadianPoint& center, double radius_rad,
                    std::vector<std::size_t>& out) const {
    std::vector<std::int32_t> stack;
    stack.push_back(0);
    while (!stack.empty()) {
      const Node& node = nodes_[static_cast<std::size_t>(stack.back())];
      stack.pop_back();
      const double d = arc_distance(node.pivot, center);
      if (d - node.radius > radius_rad + kPruneSlack) continue;
      if (d + node.radius <= radius_rad - kPruneSlack) {
        for (std::uint32_t k = node.begin; k < node.end; ++k) {
          out.push_back(rows_[k]);
        }
        continue;
      }
      if (node.is_leaf()) {
        for (std::uint32_t k = node.begin; k < node.end; ++k) {
          if (arc_distance(points_[k], center) <= radius_rad) {
            out.push_back(rows_[k]);
          }
        }
        continue;
      }
      stack.push_back(node.right);
      stack.push_back(node.left);
    }
  }

  /// Rows within `radius_rad` (inclusive) of `center`, ascending.
  [[nodiscard]] std::vector<std::size_t> radius_query(
      const RadianPoint& center, double radius_rad) const {
    std::vector<std::size_t> out;
    radius_query(center, radius_rad, out);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  // Floating haversine loses up to ~1e-8 rad near antipodes (asin near 1),
  // so the triangle-inequality shortcuts keep a margin well above that.
  static constexpr double kPruneSlack = 1e-6;

  std::int32_t build(std::uint32_t begin, std::uint32_t end, bool force_leaf) {
    const auto id = static_cast<std::int32_t>(nodes_.size());
    nodes_.push_back(Node{});
    bound(nodes_.back(), begin, end);
    nodes_.back().begin = begin;
    nodes_.back().end = end;
    if (force_leaf || end - begin <= leaf_capacity_) return id;

    const std::uint32_t mid = split(begin, end);
    const std::int32_t left = build(begin, mid, false);
    const std::int32_t right = build(mid, end, false);
    nodes_[static_cast<std::size_t>(id)].left = left;
    nodes_[static_cast<std::size_t>(id)].right = right;
    return id;
  }

  void bound(Node& node, std::uint32_t begin, std::uint32_t end) const {
    double x = 0.0, y = 0.0, z = 0.0;
    for (std::uint32_t k = begin; k < end; ++k) {
      const double c = std::cos(points_[k].lat_rad);
      x += c * std::cos(points_[k].lon_rad);
      y += c * std::sin(points_[k].lon_rad);
      z += std::sin(points_[k].lat_rad);
    }
    const double norm = std::sqrt(x * x + y * y + z * z);
    if (norm < 1e-9 * static_cast<double>(end - begin)) {
      node.pivot = points_[begin];
    } else {
      node.pivot = {std::atan2(z, std::hypot(x, y)), std::atan2(y, x)};
    }
    double radius = 0.0;
    for (std::uint32_t k = begin; k < end; ++k) {
      radius = std::max(radius, arc_distance(node.pivot, points_[k]));
    }
    node.radius = radius;
  }

  std::uint32_t farthest_from(const RadianPoint& from, std::uint32_t begin,
                              std::uint32_t end) const {
    std::uint32_t best = begin;
    double best_d = -1.0;
    for (std::uint32_t k = begin; k < end; ++k) {
      const double d = arc_distance(from, points_[k]);
      if (d > best_d) {
        best_d = d;
        best = k;
      }
    }
    return best;
  }

  // Two far-apart pivots, then each point goes to the nearer one. A split
  // that leaves fewer than 1/8 of the slice on one side (duplicates, long
  // chains) is replaced by a median split on the same pivot preference, which
  // bounds the depth at O(log N).
  std::uint32_t split(std::uint32_t begin, std::uint32_t end) {
    const RadianPoint p1 = points_[farthest_from(points_[begin], begin, end)];
    const RadianPoint p2 = points_[farthest_from(p1, begin, end)];

    const std::uint32_t n = end - begin;
    std::vector<std::pair<double, std::uint32_t>> keyed(n);
    std::uint32_t nearer_p1 = 0;
    for (std::uint32_t k = 0; k < n; ++k) {
      const RadianPoint& p = points_[begin + k];
      const double key = arc_distance(p, p1) - arc_distance(p, p2);
      keyed[k] = {key, k};
      if (key <= 0.0) ++nearer_p1;
    }
    std::uint32_t cut = nearer_p1;
    if (std::min(cut, n - cut) < std::max<std::uint32_t>(n / 8, 1)) {
      cut = n / 2;
      std::nth_element(keyed.begin(), keyed.begin() + cut, keyed.end());
    } else {
      std::stable_partition(keyed.begin(), keyed.end(),
                            [](const auto& e) { return e.first <= 0.0; });
    }

    std::vector<RadianPoint> pts(n);
    std::vector<std::uint32_t> rows(n);
    for (std::uint32_t k = 0; k < n; ++k) {
      pts[k] = points_[begin + keyed[k].second];
      rows[k] = rows_[begin + keyed[k].second];
    }
    std::copy(pts.begin(), pts.end(), points_.begin() + begin);
    std::copy(rows.begin(), rows.end(), rows_.begin() + begin);
    return begin + cut;
  }

  std::size_t leaf_capacity_;
  std::vector<RadianPoint> points_;
  std::vector<std::uint32_t> rows_;
  std::vector<Node> nodes_;
};

/// The index type the clustering pipeline queries.
using MetricIndex = BallTree;

[[nodiscard]] inline MetricIndex build_index(
    std::span<const RadianPoint> points,
    std::size_t leaf_capacity = BallTree::kDefaultLeafCapacity) {
  return MetricIndex(points, leaf_capacity);
}

}  // namespace geocompress
