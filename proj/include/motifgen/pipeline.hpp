#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "motifgen/combiner.hpp"
#include "motifgen/evaluator.hpp"
#include "motifgen/graph.hpp"
#include "motifgen/motif_census.hpp"
#include "motifgen/walk_engine.hpp"
#include "motifgen/walk_model.hpp"

namespace motifgen::pipeline {

using nlohmann::json;

struct PipelineConfig {
  std::string input;
  std::string output_dir = ".";
  std::optional<std::uint64_t> seed;  // mandatory; no clock-based default
  bool largest_component = true;

  WalkConfig walk;
  std::size_t train_walks = 0;  // 0: default budget (>= 100 |E| steps)
  std::size_t gen_walks = 0;
  std::vector<double> smoothing_grid = default_smoothing_grid();
  std::optional<double> smoothing;  // fixed value skips the overlap search
  double target_overlap = 0.6;

  CombineConfig combine;  // target_edges is taken from the input graph
  double test_fraction = 0.2;
  std::size_t baseline_samples = 5;
  std::optional<std::size_t> swap_attempts;  // default 10 |E|
  std::size_t repeats = 5;

  /// Throws InputError on invalid values.
  void validate() const;
  std::uint64_t require_seed() const;
  json to_json() const;
};

/// Records every file a command writes and emits manifest.json next to them.
class Manifest {
 public:
  Manifest(std::filesystem::path dir, std::string command, const PipelineConfig& cfg);

  /// Writes `content` to dir/relative and records its size and hash.
  void write(const std::string& relative, const std::string& kind, const std::string& content);
  void note(const std::string& key, json value);
  /// Writes manifest.json with status "complete", or "failed" plus the error.
  void finish(const std::optional<std::string>& error = std::nullopt);

  const std::filesystem::path& dir() const noexcept { return dir_; }

 private:
  std::filesystem::path dir_;
  json doc_;
};

std::uint64_t fnv1a(std::string_view bytes);
std::string hex64(std::uint64_t value);

struct LoadedGraph {
  Graph graph;
  NodeIdMap ids;
  std::size_t raw_nodes = 0;
  std::size_t raw_edges = 0;
  std::size_t dropped = 0;
};

/// Reads the edge list and, when configured, keeps its largest component.
LoadedGraph load_input(const std::string& path, bool largest_component);

json census_json(const Graph& g, const PipelineConfig& cfg);
json report_json(const MotifReport& report, Count input_cycles, Count generated_cycles);

// Subcommands. Each writes its artifacts through `manifest` and returns the
// main JSON document it produced.
json run_census(const PipelineConfig& cfg, Manifest& manifest);
json run_walks(const PipelineConfig& cfg, const std::vector<BiasKind>& kinds, bool export_generated, Manifest& manifest);

struct ViewImports {
  std::optional<std::string> s1, s2, s3;  // external walk files, one per view
};
json run_views(const PipelineConfig& cfg, const ViewImports& imports, Manifest& manifest);
/// scheme: "avg", "mmgan" or "netgan". Reads views from views_dir when given,
/// otherwise builds them.
json run_generate(const PipelineConfig& cfg, const std::string& scheme, const std::optional<std::string>& views_dir,
                  Manifest& manifest);
json run_evaluate(const PipelineConfig& cfg, const std::string& generated_path, Manifest& manifest);
json run_predict(const PipelineConfig& cfg, Manifest& manifest);
json run_pipeline(const PipelineConfig& cfg, Manifest& manifest);

}  // namespace motifgen::pipeline
