#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

namespace geocompress {

/// Mean Earth radius in kilometers. The only radius used anywhere in the
/// library: clustering, index pruning and centermost selection all share it.
inline constexpr double kEarthRadiusKm = 6371.0088;

inline constexpr double kDegToRad = std::numbers::pi / 180.0;
inline constexpr double kRadToDeg = 180.0 / std::numbers::pi;

/// Latitude/longitude in decimal degrees.
struct GeoPoint {
  double lat_deg = 0.0;
  double lon_deg = 0.0;

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

/// Latitude/longitude in radians.
struct RadianPoint {
  double lat_rad = 0.0;
  double lon_rad = 0.0;

  friend bool operator==(const RadianPoint&, const RadianPoint&) = default;
};

/// True when both components are finite and inside the usual degree ranges.
[[nodiscard]] inline bool is_valid(const GeoPoint& p) noexcept {
  return std::isfinite(p.lat_deg) && std::isfinite(p.lon_deg) &&
         p.lat_deg >= -90.0 && p.lat_deg <= 90.0 && p.lon_deg >= -180.0 &&
         p.lon_deg <= 180.0;
}

[[nodiscard]] constexpr RadianPoint to_radians(const GeoPoint& p) noexcept {
  return {p.lat_deg * kDegToRad, p.lon_deg * kDegToRad};
}

[[nodiscard]] constexpr GeoPoint from_radians(const RadianPoint& p) noexcept {
  return {p.lat_rad * kRadToDeg, p.lon_rad * kRadToDeg};
}

/// Central angle between two points, in radians of arc.
///
/// Haversine form, 2·asin(√h). Accurate for nearby points, which dominate
/// GPS workloads; h is clamped to [0, 1] so the result never exceeds π.
/// The expression is symmetric term by term, so swapping the arguments
/// yields a bit-identical result.
[[nodiscard]] inline double arc_distance(const RadianPoint& a,
                                         const RadianPoint& b) noexcept {
  const double s_lat = std::sin((b.lat_rad - a.lat_rad) * 0.5);
  const double s_lon = std::sin((b.lon_rad - a.lon_rad) * 0.5);
  // |sin| makes the lat/lon deltas sign-insensitive; products commute.
  const double h = s_lat * s_lat +
                   std::cos(a.lat_rad) * std::cos(b.lat_rad) * (s_lon * s_lon);
  return 2.0 * std::asin(std::sqrt(std::clamp(h, 0.0, 1.0)));
}

/// Great-circle distance in kilometers on the shared Earth sphere.
[[nodiscard]] inline double haversine_km(const RadianPoint& a,
                                         const RadianPoint& b) noexcept {
  return arc_distance(a, b) * kEarthRadiusKm;
}

/// Great-circle distance in meters between two degree coordinates.
[[nodiscard]] inline double great_circle_m(const GeoPoint& a,
                                           const GeoPoint& b) noexcept {
  return haversine_km(to_radians(a), to_radians(b)) * 1000.0;
}

/// Converts a physical radius to radians of arc.
[[nodiscard]] constexpr double km_to_arc(double km) noexcept {
  return km / kEarthRadiusKm;
}

}  // namespace geocompress
