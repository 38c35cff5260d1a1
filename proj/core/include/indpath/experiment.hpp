#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "indpath/pipeline.hpp"

namespace indpath {

// Seeded campaign over a (n, d, eps) grid with one pipeline mode per
// campaign. Trial seeds derive from the base seed by the fixed rule
// derive(derive(base_seed, grid_index), trial_index), so any row can be
// reproduced standalone from its seed column.
struct ExperimentConfig {
  std::vector<std::uint64_t> n_values;
  std::vector<double> d_values;
  std::vector<double> eps_values;
  PipelineMode mode = PipelineMode::practical;
  std::uint32_t seeds_per_point = 1;
  std::uint64_t base_seed = 0;
  int forest_rounds = kDefaultForestRounds;

  void validate() const;  // nonempty grid, seeds_per_point >= 1
};

struct ReportRow {
  std::uint64_t seed = 0;
  std::uint64_t n = 0;
  double d = 0.0;
  double eps = 0.0;
  std::uint32_t component_order = 0;  // L
  std::uint32_t segment_length = 0;   // m
  std::uint32_t n_components = 0;
  std::uint64_t forest_order = 0;
  std::uint64_t aux_edge_count = 0;
  std::uint64_t admissible_edge_length = 0;
  std::uint64_t final_vertex_length = 0;
  double normalized_constant = 0.0;
  bool certified = false;
  double runtime_ms = 0.0;  // wall clock; reported, never serialized to CSV
};

struct GridPointSummary {
  std::uint64_t n = 0;
  double d = 0.0;
  double eps = 0.0;
  std::uint32_t rows = 0;
  double mean_normalized = 0.0;
  double min_normalized = 0.0;
  double max_normalized = 0.0;
};

struct ExperimentReport {
  std::vector<ReportRow> rows;
  std::vector<GridPointSummary> summaries;  // one per grid point, grid order
};

// Runs one pipeline per (grid point, seed), in grid-then-seed order. Any
// uncertified output aborts the campaign with a diagnostic (uncertified
// output is a correctness bug by definition).
ExperimentReport run_experiment(const ExperimentConfig& config);

GridPointSummary summarize_rows(std::span<const ReportRow> rows);
std::vector<GridPointSummary> summarize_report(std::span<const ReportRow> rows);

// CSV schema v1. Fixed column order; floats carry 9 significant digits; the
// schema version leads every row so baselines from other schema versions are
// rejected rather than silently misread. runtime_ms is deliberately not a
// column: CSV output is byte-identical across reruns of the same config.
inline constexpr int kCsvSchemaVersion = 1;

void write_report_csv(std::ostream& out, const ExperimentReport& report);
ExperimentReport read_report_csv(std::istream& in);

struct RegressionOutcome {
  bool pass = false;
  std::string diff;  // human-readable description of every failure
};

// Compares per-grid-point mean normalized_constant against the baseline
// file: fails on drift beyond `tolerance` (relative), any uncertified row,
// mismatched grid points, or baseline schema mismatch. Throws on a missing
// or corrupt baseline.
RegressionOutcome regression_check(const ExperimentReport& report,
                                   const std::string& baseline_path, double tolerance);

}  // namespace indpath
