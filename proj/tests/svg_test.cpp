#include <gtest/gtest.h>

#include <random>
#include <regex>

#include "geocompress/pipeline.hpp"
#include "geocompress/svg.hpp"
#include "oracles.hpp"
#include "test_data.hpp"

using namespace geocompress;

namespace {

struct Marker {
  double x, y, r;
  std::string group;
};

// Structural parse: every <circle> and the <g id> it sits in.
std::vector<Marker> markers(const std::string& svg) {
  std::vector<Marker> out;
  const std::regex tag(R"re(<g id="(\w+)"|<circle cx="([-\d.]+)" cy="([-\d.]+)" r="([\d.]+)"/>)re");
  std::string group;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), tag); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (m[1].matched) {
      group = m[1];
    } else {
      out.push_back({std::stod(m[2]), std::stod(m[3]), std::stod(m[4]), group});
    }
  }
  return out;
}

}  // namespace

TEST(Svg, OneOriginalOneReduced) {
  const auto ds = make_dataset({{41.37, 2.15}});
  const auto result = compress(ds, {1.5, 1});
  const auto svg = format_scatter_svg(ds, result.reduced);
  const auto ms = markers(svg);
  ASSERT_EQ(ms.size(), 2u);
  EXPECT_EQ(ms[0].group, "original");
  EXPECT_EQ(ms[1].group, "reduced");
  EXPECT_GT(ms[1].r, ms[0].r);
  EXPECT_EQ(ms[0].x, 600.0);
  EXPECT_EQ(ms[0].y, 300.0);
  EXPECT_NE(svg.find("viewBox=\"0 0 1200 600\""), std::string::npos);
}

TEST(Svg, MarkerCountAndPlacement) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 10; ++t) {
    const auto pts = oracle::random_box(rng, 150, 60.0);
    const auto ds = make_dataset(pts);
    const auto result = compress(ds, {1.5, 1});
    const auto svg = format_scatter_svg(ds, result.reduced);
    const auto ms = markers(svg);
    ASSERT_EQ(ms.size(), ds.size() + result.reduced.records.size());
    double min_x = 1e9, max_x = -1e9, min_y = 1e9, max_y = -1e9;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      EXPECT_EQ(ms[i].group, i < ds.size() ? "original" : "reduced");
      min_x = std::min(min_x, ms[i].x);
      max_x = std::max(max_x, ms[i].x);
      min_y = std::min(min_y, ms[i].y);
      max_y = std::max(max_y, ms[i].y);
    }
    EXPECT_NEAR(min_x, 60.0, 0.01);
    EXPECT_NEAR(max_x, 1140.0, 0.01);
    EXPECT_NEAR(min_y, 30.0, 0.01);
    EXPECT_NEAR(max_y, 570.0, 0.01);
    // Northernmost point is at the top.
    std::size_t north = 0;
    for (std::size_t i = 1; i < pts.size(); ++i)
      if (pts[i].lat_deg > pts[north].lat_deg) north = i;
    EXPECT_NEAR(ms[north].y, 30.0, 0.01);
    EXPECT_EQ(format_scatter_svg(ds, result.reduced), svg);
  }
}
