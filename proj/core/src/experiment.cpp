#include "indpath/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "indpath/rng.hpp"

namespace indpath {

namespace {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

const char* kCsvHeader =
    "schema_version,seed,n,d,eps,L,m,n_components,forest_order,aux_edge_count,"
    "admissible_edge_length,final_vertex_length,normalized_constant,certified";

}  // namespace

void ExperimentConfig::validate() const {
  if (n_values.empty() || d_values.empty() || eps_values.empty()) {
    throw std::invalid_argument("experiment config: grid must be nonempty");
  }
  if (seeds_per_point < 1) {
    throw std::invalid_argument("experiment config: need at least one seed per point");
  }
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  config.validate();
  ExperimentReport report;
  std::uint64_t grid_index = 0;
  for (const std::uint64_t n : config.n_values) {
    for (const double d : config.d_values) {
      for (const double eps : config.eps_values) {
        const std::uint64_t point_key = CounterRng::derive(config.base_seed, grid_index);
        for (std::uint32_t trial = 0; trial < config.seeds_per_point; ++trial) {
          const std::uint64_t seed = CounterRng::derive(point_key, trial);
          const auto started = std::chrono::steady_clock::now();
          const PipelineResult run =
              full_pipeline(n, d, eps, seed, config.mode, config.forest_rounds);
          const auto elapsed = std::chrono::steady_clock::now() - started;

          ReportRow row;
          row.seed = seed;
          row.n = n;
          row.d = d;
          row.eps = eps;
          row.component_order = run.params.component_order;
          row.segment_length = run.params.segment_length;
          row.n_components = run.stats.components_used;
          row.forest_order = run.stats.forest_order;
          row.aux_edge_count = run.stats.aux_edge_count;
          row.admissible_edge_length = run.stats.admissible_edge_length;
          row.final_vertex_length = run.stats.final_vertex_length;
          row.normalized_constant = run.stats.normalized_constant;
          row.certified = run.certified;
          row.runtime_ms =
              std::chrono::duration<double, std::milli>(elapsed).count();
          if (!row.certified) {
            std::ostringstream diag;
            diag << "run_experiment: uncertified output at n=" << n << " d=" << d
                 << " eps=" << eps << " seed=" << seed
                 << " (final_vertex_length=" << row.final_vertex_length << ")";
            throw std::runtime_error(diag.str());
          }
          report.rows.push_back(row);
        }
        ++grid_index;
      }
    }
  }
  report.summaries = summarize_report(report.rows);
  return report;
}

GridPointSummary summarize_rows(std::span<const ReportRow> rows) {
  GridPointSummary s;
  if (rows.empty()) return s;
  s.n = rows.front().n;
  s.d = rows.front().d;
  s.eps = rows.front().eps;
  s.rows = static_cast<std::uint32_t>(rows.size());
  s.min_normalized = rows.front().normalized_constant;
  s.max_normalized = rows.front().normalized_constant;
  double sum = 0.0;
  for (const auto& row : rows) {
    sum += row.normalized_constant;
    s.min_normalized = std::min(s.min_normalized, row.normalized_constant);
    s.max_normalized = std::max(s.max_normalized, row.normalized_constant);
  }
  s.mean_normalized = sum / static_cast<double>(rows.size());
  return s;
}

std::vector<GridPointSummary> summarize_report(std::span<const ReportRow> rows) {
  std::vector<GridPointSummary> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= rows.size(); ++i) {
    const bool boundary = i == rows.size() || (i > start && (rows[i].n != rows[start].n ||
                                                             rows[i].d != rows[start].d ||
                                                             rows[i].eps != rows[start].eps));
    if (boundary) {
      if (i > start) out.push_back(summarize_rows(rows.subspan(start, i - start)));
      start = i;
    }
  }
  return out;
}

void write_report_csv(std::ostream& out, const ExperimentReport& report) {
  out << kCsvHeader << '\n';
  for (const auto& row : report.rows) {
    out << kCsvSchemaVersion << ',' << row.seed << ',' << row.n << ','
        << format_double(row.d) << ',' << format_double(row.eps) << ','
        << row.component_order << ',' << row.segment_length << ',' << row.n_components
        << ',' << row.forest_order << ',' << row.aux_edge_count << ','
        << row.admissible_edge_length << ',' << row.final_vertex_length << ','
        << format_double(row.normalized_constant) << ',' << (row.certified ? 1 : 0)
        << '\n';
  }
}

ExperimentReport read_report_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("report csv: empty input");
  if (line != kCsvHeader) throw std::runtime_error("report csv: unexpected header");
  ExperimentReport report;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    int schema = 0;
    ReportRow row;
    int certified = 0;
    if (!(fields >> schema >> row.seed >> row.n >> row.d >> row.eps >>
          row.component_order >> row.segment_length >> row.n_components >>
          row.forest_order >> row.aux_edge_count >> row.admissible_edge_length >>
          row.final_vertex_length >> row.normalized_constant >> certified)) {
      throw std::runtime_error("report csv: malformed row");
    }
    if (schema != kCsvSchemaVersion) {
      throw std::runtime_error("report csv: schema version mismatch");
    }
    row.certified = certified != 0;
    report.rows.push_back(row);
  }
  report.summaries = summarize_report(report.rows);
  return report;
}

RegressionOutcome regression_check(const ExperimentReport& report,
                                   const std::string& baseline_path, double tolerance) {
  std::ifstream in(baseline_path);
  if (!in) throw std::runtime_error("regression_check: cannot open baseline " + baseline_path);
  const ExperimentReport baseline = read_report_csv(in);

  RegressionOutcome outcome;
  outcome.pass = true;
  std::ostringstream diff;

  for (const auto& row : report.rows) {
    if (!row.certified) {
      outcome.pass = false;
      diff << "uncertified row at n=" << row.n << " d=" << row.d << " seed=" << row.seed
           << '\n';
    }
  }
  for (const auto& row : baseline.rows) {
    if (!row.certified) {
      outcome.pass = false;
      diff << "baseline contains uncertified row at n=" << row.n << " d=" << row.d
           << " seed=" << row.seed << '\n';
    }
  }

  if (report.summaries.size() != baseline.summaries.size()) {
    outcome.pass = false;
    diff << "grid mismatch: report has " << report.summaries.size()
         << " points, baseline has " << baseline.summaries.size() << '\n';
  } else {
    for (std::size_t i = 0; i < report.summaries.size(); ++i) {
      const auto& got = report.summaries[i];
      const auto& want = baseline.summaries[i];
      if (got.n != want.n || got.d != want.d || got.eps != want.eps) {
        outcome.pass = false;
        diff << "grid point " << i << " mismatch: (" << got.n << ',' << got.d << ','
             << got.eps << ") vs baseline (" << want.n << ',' << want.d << ','
             << want.eps << ")\n";
        continue;
      }
      const double scale = std::abs(want.mean_normalized);
      const double drift = std::abs(got.mean_normalized - want.mean_normalized);
      const bool ok = scale < 1e-12 ? drift < 1e-12 : drift <= tolerance * scale;
      if (!ok) {
        outcome.pass = false;
        diff << "grid point (n=" << got.n << ", d=" << got.d << ", eps=" << got.eps
             << "): mean normalized_constant drifted " << format_double(got.mean_normalized)
             << " vs baseline " << format_double(want.mean_normalized) << " (tolerance "
             << format_double(tolerance * 100.0) << "%)\n";
      }
    }
  }
  outcome.diff = diff.str();
  return outcome;
}

}  // namespace indpath
