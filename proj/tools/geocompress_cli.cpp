// Command-line front end: cluster a CSV of points and keep one
// representative row per cluster.

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <iostream>
#include <string>
#include <system_error>

#include "geocompress.hpp"

namespace fs = std::filesystem;

namespace {

bool same_file(const fs::path& a, const fs::path& b) {
  std::error_code ec;
  if (fs::exists(b, ec) && fs::equivalent(a, b, ec)) return true;
  return fs::weakly_canonical(a, ec) == fs::weakly_canonical(b, ec);
}

}  // namespace

int main(int argc, char** argv) {
  geocompress::CliConfig config;
  std::string plot;
  bool quiet = false;

  CLI::App app{"Compress a point dataset to one representative row per DBSCAN cluster",
               "geocompress"};
  app.add_option("--input", config.input_path, "Input CSV with a header row")->required();
  app.add_option("--output", config.output_path, "Reduced CSV to write")->required();
  app.add_option("--eps-km", config.eps_km, "Neighborhood radius in kilometers")
      ->capture_default_str();
  app.add_option("--min-samples", config.min_samples,
                 "Minimum neighborhood size, the point itself included")
      ->capture_default_str();
  app.add_option("--lat-col", config.lat_col, "Latitude column name")->capture_default_str();
  app.add_option("--lon-col", config.lon_col, "Longitude column name")->capture_default_str();
  app.add_option("--plot", plot, "Write a before/after scatter plot (SVG)");
  app.add_flag("--quiet", quiet, "Do not print the summary line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  auto usage_error = [&](const std::string& msg) {
    std::cerr << "error: " << msg << "\n\n" << app.help();
    return 1;
  };
  if (!std::isfinite(config.eps_km) || config.eps_km <= 0.0) {
    return usage_error("--eps-km must be a finite number > 0");
  }
  if (config.min_samples < 1) return usage_error("--min-samples must be >= 1");
  if (config.lat_col == config.lon_col) {
    return usage_error("--lat-col and --lon-col must differ");
  }
  if (same_file(config.input_path, config.output_path) ||
      (!plot.empty() && same_file(config.input_path, plot))) {
    return usage_error("output paths must not overwrite the input file");
  }
  config.summary = !quiet;
  if (!plot.empty()) config.plot_path = plot;

  try {
    const std::string summary = geocompress::run_pipeline(config);
    if (config.summary) std::cout << summary << '\n';
  } catch (const std::exception& e) {
    std::cerr << "geocompress: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
