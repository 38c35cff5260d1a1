// Command line front end: seeded generation, forest growth, conflict DFS,
// moment evaluators, exact oracles, the full pipeline and experiment
// campaigns with regression baselines.
//
// Exit codes: 0 success, 1 validation/regression failure, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "indpath/conflict_dfs.hpp"
#include "indpath/experiment.hpp"
#include "indpath/forest.hpp"
#include "indpath/gnp.hpp"
#include "indpath/graph_io.hpp"
#include "indpath/moments.hpp"
#include "indpath/oracles.hpp"
#include "indpath/pipeline.hpp"
#include "indpath/portable_math.hpp"
#include "indpath/rng.hpp"

namespace {

using nlohmann::json;
using namespace indpath;

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string out;
};

std::ostream& open_output(const GlobalOptions& opts, std::ofstream& file) {
  if (opts.out.empty()) return std::cout;
  file.open(opts.out);
  if (!file) throw std::runtime_error("cannot open output file " + opts.out);
  return file;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path);
  return read_edge_list(in);
}

// Pattern specs: "k2", "path:K", "star:K", or "file:PATH" (edge-list format).
Graph make_pattern(const std::string& spec) {
  if (spec == "k2") return make_pattern("path:2");
  if (spec.rfind("path:", 0) == 0) {
    const auto k = static_cast<Vertex>(std::stoul(spec.substr(5)));
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(k, edges);
  }
  if (spec.rfind("star:", 0) == 0) {
    const auto k = static_cast<Vertex>(std::stoul(spec.substr(5)));
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 1; i < k; ++i) edges.emplace_back(Vertex{0}, i);
    return Graph::from_edges(k, edges);
  }
  if (spec.rfind("file:", 0) == 0) return load_graph(spec.substr(5));
  throw CLI::ValidationError("--pattern", "unknown pattern spec: " + spec);
}

PipelineMode parse_mode(const std::string& mode) {
  if (mode == "practical") return PipelineMode::practical;
  if (mode == "paper-faithful") return PipelineMode::paper_faithful;
  throw CLI::ValidationError("--mode", "must be 'practical' or 'paper-faithful'");
}

json pipeline_result_json(const PipelineResult& r, bool include_path) {
  json j;
  j["params"] = {{"n", r.params.n},
                 {"d", r.params.d},
                 {"eps", r.params.eps},
                 {"p", r.params.p},
                 {"L", r.params.component_order},
                 {"m", r.params.segment_length},
                 {"k_target", r.params.forest_order_target},
                 {"N_target", r.params.component_target},
                 {"mode", r.params.mode == PipelineMode::practical ? "practical"
                                                                   : "paper-faithful"},
                 {"degenerate", r.params.degenerate},
                 {"formula_L", r.params.formula_component_order},
                 {"formula_m", r.params.formula_segment_length},
                 {"formula_k", r.params.formula_forest_order}};
  j["stats"] = {{"forest_order", r.stats.forest_order},
                {"components_built", r.stats.components_built},
                {"components_used", r.stats.components_used},
                {"aux_edge_count", r.stats.aux_edge_count},
                {"admissible_edge_length", r.stats.admissible_edge_length},
                {"final_vertex_length", r.stats.final_vertex_length},
                {"normalized_constant", r.stats.normalized_constant}};
  j["certified"] = r.certified;
  if (include_path) j["path"] = r.path;
  return j;
}

int run_gen(const GlobalOptions& opts, std::uint64_t n, std::optional<double> p,
            std::optional<double> d) {
  if (p.has_value() == d.has_value()) {
    throw CLI::ValidationError("gen", "give exactly one of --p and --d");
  }
  GnpParams params{static_cast<Vertex>(n),
                   p ? *p : *d / static_cast<double>(n)};
  const Graph g = sample_gnp(params, opts.seed);
  std::ofstream file;
  write_edge_list(open_output(opts, file), g);
  std::cerr << "sampled G(" << n << ", " << params.p << "): " << g.edge_count()
            << " edges\n";
  return 0;
}

int run_forest(const GlobalOptions& opts, std::uint64_t n, double d, std::uint32_t order,
               int rounds) {
  const GnpParams params{static_cast<Vertex>(n), d / static_cast<double>(n)};
  const Graph g = sample_gnp(params, CounterRng::derive(opts.seed, 1));
  std::vector<Vertex> all(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
  const LinearForest forest =
      build_induced_linear_forest(g, all, order, rounds, CounterRng::derive(opts.seed, 3));
  const bool certified = verify_induced_forest(g, forest, order);

  std::ofstream file;
  std::ostream& out = open_output(opts, file);
  for (const auto& comp : forest.components) {
    for (std::size_t i = 0; i < comp.size(); ++i) out << (i ? " " : "") << comp[i];
    out << '\n';
  }
  json summary = {{"n", n},
                  {"d", d},
                  {"L", order},
                  {"rounds", rounds},
                  {"seed", opts.seed},
                  {"components", forest.components.size()},
                  {"total_order", forest.total_order()},
                  {"normalized_order", normalized_forest_order(
                                           forest, static_cast<double>(n), params.p)},
                  {"certified", certified}};
  std::cerr << summary.dump() << '\n';
  return certified ? 0 : 1;
}

int run_dfs(const GlobalOptions& opts, const std::string& input, int hypothesis_k,
            bool compare_exact) {
  std::ifstream in(input);
  if (!in) throw std::runtime_error("cannot open instance file " + input);
  const auto [digraph, conflicts] = read_conflict_instance(in);
  const AdmissiblePath path = find_admissible_path(digraph, conflicts);
  const bool valid = validate_admissible_path(digraph, conflicts, path);

  json j = {{"vertices", path.vertices},
            {"representatives", path.representatives},
            {"edge_length", path.edge_length()},
            {"valid", valid}};
  if (hypothesis_k > 0) {
    const int cap = static_cast<int>(digraph.vertex_count()) - 1;
    const bool holds = check_expansion_hypothesis(digraph, conflicts, hypothesis_k, cap);
    j["hypothesis_k"] = hypothesis_k;
    j["hypothesis_holds"] = holds;
    if (holds) {
      const auto guarantee = static_cast<long long>(digraph.vertex_count()) -
                             2ll * hypothesis_k + 1;
      j["guaranteed_edge_length"] = guarantee;
    }
  }
  if (compare_exact) {
    const auto exact = longest_admissible_path_exact(digraph, conflicts);
    j["exact_edge_length"] = exact.edge_length;
  }

  std::ofstream file;
  std::ostream& out = open_output(opts, file);
  if (opts.format == "json") {
    out << j.dump(2) << '\n';
  } else {
    out << "edge_length " << path.edge_length() << "\nvalid " << (valid ? 1 : 0) << '\n';
    out << "vertices";
    for (const Vertex v : path.vertices) out << ' ' << v;
    out << "\nrepresentatives";
    for (const auto r : path.representatives) out << ' ' << r;
    out << '\n';
    if (j.contains("hypothesis_holds")) {
      out << "hypothesis_holds " << (j["hypothesis_holds"].get<bool>() ? 1 : 0) << '\n';
    }
    if (j.contains("exact_edge_length")) {
      out << "exact_edge_length " << j["exact_edge_length"].get<std::size_t>() << '\n';
    }
  }
  return valid ? 0 : 1;
}

int run_pipeline_cmd(const GlobalOptions& opts, std::uint64_t n, double d, double eps,
                     const std::string& mode, int rounds, const std::string& emit_graph,
                     bool include_path) {
  const PipelineResult result =
      full_pipeline(n, d, eps, opts.seed, parse_mode(mode), rounds);
  if (!emit_graph.empty()) {
    // Regenerate the same graph for post-mortems.
    const GnpParams params{static_cast<Vertex>(n), d / static_cast<double>(n)};
    const Graph g = sample_gnp(params, CounterRng::derive(opts.seed, 1));
    std::ofstream gfile(emit_graph);
    if (!gfile) throw std::runtime_error("cannot open graph output " + emit_graph);
    write_edge_list(gfile, g);
  }
  json j = pipeline_result_json(result, include_path);
  j["seed"] = opts.seed;

  std::ofstream file;
  std::ostream& out = open_output(opts, file);
  if (opts.format == "text") {
    out << "n " << n << "\nd " << d << "\neps " << eps << "\nseed " << opts.seed
        << "\nL " << result.params.component_order << "\nm "
        << result.params.segment_length << "\nforest_order " << result.stats.forest_order
        << "\naux_edges " << result.stats.aux_edge_count << "\nadmissible_edge_length "
        << result.stats.admissible_edge_length << "\nfinal_vertex_length "
        << result.stats.final_vertex_length << "\nnormalized_constant "
        << result.stats.normalized_constant << "\ncertified "
        << (result.certified ? 1 : 0) << '\n';
  } else {
    out << j.dump(2) << '\n';
  }
  return result.certified ? 0 : 1;
}

int run_moments(const GlobalOptions& opts, const std::string& eval, json args) {
  json out;
  out["evaluator"] = eval;
  const auto arg = [&](const char* name) -> double {
    if (!args.contains(name)) {
      throw CLI::ValidationError("moments", std::string("missing --") + name +
                                                " for evaluator " + eval);
    }
    return args[name].get<double>();
  };
  if (eval == "expected-copies") {
    ForestShape shape{static_cast<std::uint32_t>(arg("k")),
                      static_cast<std::uint32_t>(arg("edges")),
                      static_cast<std::uint32_t>(arg("components")),
                      static_cast<std::uint32_t>(args.value("delta", 1.0))};
    const double log_value = log_expected_labelled_copies(
        static_cast<std::uint64_t>(arg("n")), arg("p"), shape);
    out["log_value"] = log_value;
    out["value"] = std::exp(log_value);
  } else if (eval == "conditional-prob") {
    ForestShape shape{static_cast<std::uint32_t>(arg("k")),
                      static_cast<std::uint32_t>(arg("edges")),
                      static_cast<std::uint32_t>(arg("components")),
                      static_cast<std::uint32_t>(args.value("delta", 1.0))};
    IntersectionProfile profile{static_cast<std::uint32_t>(arg("s")),
                                static_cast<std::uint32_t>(arg("c"))};
    const double log_value = log_conditional_copy_prob(arg("p"), shape, profile);
    out["log_value"] = log_value;
    out["value"] = std::exp(log_value);
  } else if (eval == "compatible-bound") {
    const double log_value = log_compatible_count_bound(
        static_cast<std::uint32_t>(arg("k")), static_cast<std::uint32_t>(arg("s")),
        static_cast<std::uint32_t>(arg("c")), static_cast<std::uint32_t>(arg("delta")),
        static_cast<std::uint64_t>(arg("n")));
    out["log_value"] = log_value;
    out["value"] = std::exp(log_value);
  } else if (eval == "subtree-bound") {
    const double log_value = log_subtree_count_bound(
        static_cast<std::uint32_t>(arg("delta")), static_cast<std::uint32_t>(arg("s")));
    out["log_value"] = log_value;
    out["value"] = std::exp(log_value);
  } else if (eval == "induced-copy-lower") {
    out["log_value"] =
        induced_copy_prob_lower_log(arg("n"), arg("d"), arg("delta"), arg("eps"));
    out["degree_condition_ok"] = induced_copy_degree_ok(arg("d"), arg("delta"), arg("eps"));
  } else if (eval == "tmatching-first-moment") {
    const double log_value = tmatching_first_moment_log(
        static_cast<std::uint64_t>(arg("n")), arg("p"),
        static_cast<std::uint32_t>(arg("torder")), static_cast<std::uint32_t>(arg("r")));
    out["log_value"] = log_value;
    out["value"] = std::exp(log_value);
  } else if (eval == "talagrand") {
    TalagrandParams params{arg("b"), arg("t"), arg("lipschitz"),
                           args.contains("offset") ? arg("offset") : arg("lipschitz")};
    const TalagrandTail tail = talagrand_tail(params);
    out["threshold"] = tail.threshold;
    out["tail"] = tail.tail;
  } else if (eval == "connection-feasibility") {
    ConnectionStats stats{static_cast<std::uint32_t>(arg("m")), arg("p"),
                          static_cast<std::uint64_t>(arg("forest-order")),
                          static_cast<std::uint64_t>(arg("x-size"))};
    const FeasibilityReport report =
        connection_feasibility_report(arg("n"), arg("d"), arg("eps"), stats, arg("N"));
    out["alpha"] = report.alpha;
    out["per_triple_failure_log"] = report.per_triple_failure_log;
    out["union_bound_log"] = report.union_bound_log;
    out["margin"] = report.margin;
    out["closes"] = report.margin < 0.0;
  } else {
    throw CLI::ValidationError("--eval", "unknown evaluator: " + eval);
  }

  std::ofstream file;
  std::ostream& os = open_output(opts, file);
  if (opts.format == "json") {
    os << out.dump(2) << '\n';
  } else {
    for (const auto& [key, value] : out.items()) {
      os << key << ' ' << (value.is_string() ? value.get<std::string>() : value.dump())
         << '\n';
    }
  }
  return 0;
}

int run_oracle(const GlobalOptions& opts, const std::string& input, const std::string& op,
               const std::string& pattern_spec, std::uint64_t v, std::uint64_t s) {
  const Graph g = load_graph(input);
  json out;
  out["op"] = op;
  if (op == "longest-induced-path") {
    const auto primary = max_induced_path_exact(g);
    const auto check = max_induced_path_by_subsets(g);
    out["edge_length"] = primary.edge_length;
    out["witness"] = primary.witness;
    out["subset_method_edge_length"] = check.edge_length;
    out["methods_agree"] = primary.edge_length == check.edge_length;
  } else if (op == "max-tmatching") {
    out["order"] = max_induced_tmatching_exact(g, make_pattern(pattern_spec));
  } else if (op == "count-copies") {
    out["count"] = count_labelled_induced_copies(g, make_pattern(pattern_spec));
  } else if (op == "compatible-profiles") {
    const Graph pattern = make_pattern(pattern_spec);
    std::vector<Vertex> sigma0(pattern.vertex_count());
    for (Vertex i = 0; i < pattern.vertex_count(); ++i) sigma0[i] = i;
    const auto profiles =
        enumerate_compatible_by_profile(pattern, sigma0, g.vertex_count());
    json rows = json::array();
    for (const auto& [profile, count] : profiles) {
      rows.push_back({{"s", profile.s}, {"c", profile.c}, {"count", count}});
    }
    out["profiles"] = rows;
  } else if (op == "subtrees") {
    out["count"] = count_subtrees_containing(g, static_cast<Vertex>(v), s);
  } else {
    throw CLI::ValidationError("--op", "unknown oracle op: " + op);
  }

  std::ofstream file;
  std::ostream& os = open_output(opts, file);
  if (opts.format == "json") {
    os << out.dump(2) << '\n';
  } else {
    for (const auto& [key, value] : out.items()) os << key << ' ' << value.dump() << '\n';
  }
  return 0;
}

int run_experiment_cmd(const GlobalOptions& opts, const ExperimentConfig& config) {
  const ExperimentReport report = run_experiment(config);

  std::ofstream file;
  std::ostream& os = open_output(opts, file);
  if (opts.format == "json") {
    json rows = json::array();
    for (const auto& row : report.rows) {
      rows.push_back({{"seed", row.seed},
                      {"n", row.n},
                      {"d", row.d},
                      {"eps", row.eps},
                      {"L", row.component_order},
                      {"m", row.segment_length},
                      {"n_components", row.n_components},
                      {"forest_order", row.forest_order},
                      {"aux_edge_count", row.aux_edge_count},
                      {"admissible_edge_length", row.admissible_edge_length},
                      {"final_vertex_length", row.final_vertex_length},
                      {"normalized_constant", row.normalized_constant},
                      {"certified", row.certified},
                      {"runtime_ms", row.runtime_ms}});
    }
    json summaries = json::array();
    for (const auto& s : report.summaries) {
      summaries.push_back({{"n", s.n},
                           {"d", s.d},
                           {"eps", s.eps},
                           {"rows", s.rows},
                           {"mean_normalized", s.mean_normalized},
                           {"min_normalized", s.min_normalized},
                           {"max_normalized", s.max_normalized}});
    }
    os << json{{"rows", rows}, {"summary", summaries}}.dump(2) << '\n';
  } else {
    write_report_csv(os, report);
  }
  // Summary block on stderr so CSV files stay byte-stable.
  for (const auto& s : report.summaries) {
    std::cerr << "grid point n=" << s.n << " d=" << s.d << " eps=" << s.eps << ": mean "
              << s.mean_normalized << " min " << s.min_normalized << " max "
              << s.max_normalized << " over " << s.rows << " rows\n";
  }
  return 0;
}

int run_regress(const std::string& report_path, const std::string& baseline_path,
                double tolerance) {
  std::ifstream in(report_path);
  if (!in) throw std::runtime_error("cannot open report " + report_path);
  const ExperimentReport report = read_report_csv(in);
  const RegressionOutcome outcome = regression_check(report, baseline_path, tolerance);
  if (outcome.pass) {
    std::cout << "regression check passed (" << report.rows.size() << " rows, "
              << report.summaries.size() << " grid points)\n";
    return 0;
  }
  std::cout << "regression check FAILED\n" << outcome.diff;
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"long induced paths in sparse random graphs: two-stage pipeline tools"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_option("--seed", opts.seed, "base random seed")->capture_default_str();
  app.add_option("--format", opts.format, "output format: text|json|csv")
      ->capture_default_str();
  app.add_option("--out", opts.out, "output file (default stdout)");

  // gen
  auto* gen = app.add_subcommand("gen", "sample G(n, p) and write an edge list");
  std::uint64_t gen_n = 100;
  std::optional<double> gen_p, gen_d;
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--p", gen_p, "edge probability");
  gen->add_option("--d", gen_d, "expected degree (p = d/n)");

  // forest
  auto* forest = app.add_subcommand("forest", "grow an induced linear forest in G(n, d/n)");
  std::uint64_t forest_n = 1000;
  double forest_d = 16.0;
  std::uint32_t forest_order = 4;
  int forest_rounds = kDefaultForestRounds;
  forest->add_option("--n", forest_n, "vertex count")->required();
  forest->add_option("--d", forest_d, "expected degree")->required();
  forest->add_option("--L", forest_order, "component order")->required();
  forest->add_option("--rounds", forest_rounds, "restart rounds")->capture_default_str();

  // dfs
  auto* dfs = app.add_subcommand("dfs", "run the conflict DFS on an instance file");
  std::string dfs_in;
  int dfs_hypothesis_k = 0;
  bool dfs_exact = false;
  dfs->add_option("--in", dfs_in, "instance file (N M R format)")->required();
  dfs->add_option("--check-hypothesis", dfs_hypothesis_k,
                  "also check the expansion hypothesis for this k");
  dfs->add_flag("--exact", dfs_exact, "also run the brute-force oracle (small instances)");

  // pipeline
  auto* pipeline = app.add_subcommand("pipeline", "full two-stage construction");
  std::uint64_t pipe_n = 2000;
  double pipe_d = 16.0, pipe_eps = 0.25;
  std::string pipe_mode = "practical";
  std::string pipe_emit_graph;
  int pipe_rounds = kDefaultForestRounds;
  bool pipe_path = false;
  pipeline->add_option("--n", pipe_n, "vertex count")->required();
  pipeline->add_option("--d", pipe_d, "expected degree")->required();
  pipeline->add_option("--eps", pipe_eps, "epsilon")->capture_default_str();
  pipeline->add_option("--mode", pipe_mode, "practical|paper-faithful")
      ->capture_default_str();
  pipeline->add_option("--rounds", pipe_rounds, "forest restart rounds")
      ->capture_default_str();
  pipeline->add_option("--emit-graph", pipe_emit_graph,
                       "write the sampled graph (edge-list) to this file");
  pipeline->add_flag("--emit-path", pipe_path, "include the path vertices in JSON output");

  // moments
  auto* moments = app.add_subcommand("moments", "evaluate a probability/counting formula");
  std::string eval_name;
  moments->add_option("--eval", eval_name,
                      "expected-copies|conditional-prob|compatible-bound|subtree-bound|"
                      "induced-copy-lower|tmatching-first-moment|talagrand|"
                      "connection-feasibility")
      ->required();
  std::map<std::string, double> moment_args;
  for (const char* name :
       {"n", "p", "d", "eps", "k", "s", "c", "delta", "edges", "components", "torder", "r",
        "m", "forest-order", "x-size", "N", "b", "t", "lipschitz", "offset"}) {
    moments->add_option("--" + std::string(name), moment_args[name]);
  }

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exhaustive small-instance ground truth");
  std::string oracle_in, oracle_op, oracle_pattern = "k2";
  std::uint64_t oracle_v = 0, oracle_s = 1;
  oracle->add_option("--in", oracle_in, "graph file (edge-list format)")->required();
  oracle->add_option("--op", oracle_op,
                     "longest-induced-path|max-tmatching|count-copies|"
                     "compatible-profiles|subtrees")
      ->required();
  oracle->add_option("--pattern", oracle_pattern, "k2|path:K|star:K|file:PATH")
      ->capture_default_str();
  oracle->add_option("--v", oracle_v, "root vertex (subtrees)");
  oracle->add_option("--s", oracle_s, "subtree order (subtrees)");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "seeded campaign over a grid");
  ExperimentConfig config;
  std::string exp_mode = "practical";
  experiment->add_option("--n", config.n_values, "vertex counts")->required();
  experiment->add_option("--d", config.d_values, "expected degrees")->required();
  experiment->add_option("--eps", config.eps_values, "epsilons")->required();
  experiment->add_option("--mode", exp_mode, "practical|paper-faithful")
      ->capture_default_str();
  experiment->add_option("--seeds", config.seeds_per_point, "trials per grid point")
      ->capture_default_str();
  experiment->add_option("--rounds", config.forest_rounds, "forest restart rounds")
      ->capture_default_str();

  // regress
  auto* regress = app.add_subcommand("regress", "compare a report CSV against a baseline");
  std::string regress_report, regress_baseline;
  double regress_tolerance = 0.05;
  regress->add_option("--report", regress_report, "report CSV")->required();
  regress->add_option("--baseline", regress_baseline, "baseline CSV")->required();
  regress->add_option("--tolerance", regress_tolerance, "relative tolerance on drift")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2, --help exits 0
  }

  try {
    if (gen->parsed()) return run_gen(opts, gen_n, gen_p, gen_d);
    if (forest->parsed()) return run_forest(opts, forest_n, forest_d, forest_order,
                                            forest_rounds);
    if (dfs->parsed()) return run_dfs(opts, dfs_in, dfs_hypothesis_k, dfs_exact);
    if (pipeline->parsed()) {
      return run_pipeline_cmd(opts, pipe_n, pipe_d, pipe_eps, pipe_mode, pipe_rounds,
                              pipe_emit_graph, pipe_path);
    }
    if (moments->parsed()) {
      json args;
      for (const auto& [name, value] : moment_args) {
        if (moments->count("--" + name) > 0) args[name] = value;
      }
      return run_moments(opts, eval_name, args);
    }
    if (oracle->parsed()) {
      return run_oracle(opts, oracle_in, oracle_op, oracle_pattern, oracle_v, oracle_s);
    }
    if (experiment->parsed()) {
      config.mode = parse_mode(exp_mode);
      config.base_seed = opts.seed;
      return run_experiment_cmd(opts, config);
    }
    if (regress->parsed()) {
      return run_regress(regress_report, regress_baseline, regress_tolerance);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
