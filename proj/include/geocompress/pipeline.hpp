#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "geocompress/ball_tree.hpp"
#include "geocompress/csv.hpp"
#include "geocompress/dataset.hpp"
#include "geocompress/dbscan.hpp"
#include "geocompress/reduce.hpp"
#include "geocompress/svg.hpp"

namespace geocompress {

struct PipelineResult {
  ClusterLabels labels;
  ReducedDataset reduced;
  CompressionReport report;
};

/// Cluster and reduce an in-memory dataset.
[[nodiscard]] inline PipelineResult compress(const Dataset& dataset,
                                             const DbscanParams& params) {
  params.validate();
  if (dataset.empty()) throw InputError("no data rows");
  const auto points = dataset.radian_points();
  const auto index = build_index(points);
  PipelineResult out;
  out.labels = run_dbscan(points, params, index);
  out.reduced = reduce_dataset(dataset, out.labels);
  out.report = compression_report(dataset.size(), out.reduced.records.size());
  return out;
}

/// `clusters=<k> original=<n> reduced=<k> compression=<p>% noise=<m>`
[[nodiscard]] inline std::string summary_line(const PipelineResult& r) {
  return "clusters=" + std::to_string(r.labels.num_clusters) +
         " original=" + std::to_string(r.report.original_count) +
         " reduced=" + std::to_string(r.report.reduced_count) +
         " compression=" + format_pct(r.report.compression_pct) +
         "% noise=" + std::to_string(r.reduced.noise_count);
}

struct CliConfig {
  std::filesystem::path input_path;
  std::filesystem::path output_path;
  double eps_km = 1.5;
  std::size_t min_samples = 1;
  std::string lat_col = "lat";
  std::string lon_col = "lon";
  std::optional<std::filesystem::path> plot_path;
  bool summary = true;
};

/// Read, cluster, reduce, write. Returns the summary line.
inline std::string run_pipeline(const CliConfig& config) {
  const Dataset dataset = read_csv(config.input_path, config.lat_col, config.lon_col);
  const PipelineResult result =
      compress(dataset, DbscanParams{config.eps_km, config.min_samples});
  write_csv(result.reduced, config.output_path);
  if (config.plot_path) emit_scatter_svg(dataset, result.reduced, *config.plot_path);
  return summary_line(result);
}

}  // namespace geocompress
