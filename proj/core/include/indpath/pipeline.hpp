#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "indpath/conflict_dfs.hpp"
#include "indpath/forest.hpp"
#include "indpath/gnp.hpp"
#include "indpath/graph.hpp"

namespace indpath {

enum class PipelineMode { paper_faithful, practical };

// All scalar knobs of the two-stage construction. The formula_* fields hold
// the raw real-valued prescriptions L = sqrt(d)/log^5 d, m = eps L / 8,
// k = (3/2 - eps/4)(n/d) log d; the integer fields are what the machinery
// actually runs with. In paper_faithful mode the integers round the
// formulas; when that degenerates (L < 3, which it does at any feasible d)
// the run substitutes the minimal viable L = 3, m = 1 and sets the
// `degenerate` flag. In practical mode L = max(3, round(sqrt(d))) and
// m = round(eps L / 8) clamped into [1, (L-1)/2].
struct PipelineParams {
  std::uint64_t n = 0;
  double d = 0.0;
  double eps = 0.0;
  double p = 0.0;  // d / n

  std::uint32_t component_order = 0;     // L
  std::uint32_t segment_length = 0;      // m, 2m < L
  std::uint64_t forest_order_target = 0; // k = N * L
  std::uint32_t component_target = 0;    // N

  PipelineMode mode = PipelineMode::practical;
  bool degenerate = false;

  double formula_component_order = 0.0;
  double formula_segment_length = 0.0;
  double formula_forest_order = 0.0;

  void validate() const;
};

PipelineParams make_pipeline_params(std::uint64_t n, double d, double eps,
                                    PipelineMode mode);

// One auxiliary edge certificate: connector `a` has exactly one host edge
// into the tail segment of the source component (attach_tail), exactly one
// into the head segment of the target component (attach_head), and none to
// the rest of the forest. All vertices are host ids.
struct AuxEdgeWitness {
  std::uint32_t source_component = 0;
  std::uint32_t target_component = 0;
  Vertex connector = 0;
  Vertex attach_tail = 0;
  Vertex attach_head = 0;
};

// The auxiliary digraph over forest components, its conflict system (the
// conflict graph is the host restricted to v2, relabeled; representative id
// r is host vertex rep_to_vertex[r]), and the witness table aligned with
// each edge's representative list.
struct AuxiliaryDigraph {
  Digraph digraph;
  ConflictSystem conflicts;
  std::vector<Vertex> rep_to_vertex;
  std::vector<std::vector<AuxEdgeWitness>> witnesses;  // by edge id, same order as lambda
};

// Single pass over v2: each candidate connector is classified by scanning
// its host neighbors against a vertex -> (component, position) index, total
// O(sum deg(a)). Requires the forest certified induced with components of
// order > 2m and v2 disjoint from the forest.
AuxiliaryDigraph build_aux_digraph(const Graph& g, const LinearForest& f,
                                   std::span<const Vertex> v2, std::uint32_t m);

// Concatenates the admissible path's components through their connectors:
// the source component is kept from its head up to attach_tail, then the
// connector, then the target from attach_head onward. Throws if the path
// fails validation against the auxiliary structures, a witness is missing,
// or a witness fails its adjacency / segment re-check against g.
std::vector<Vertex> assemble_induced_path(const Graph& g, const LinearForest& f,
                                          const AdmissiblePath& ap,
                                          const AuxiliaryDigraph& aux, std::uint32_t m);

struct PipelineStats {
  std::uint64_t forest_order = 0;        // of the forest handed to the aux stage
  std::uint32_t components_built = 0;    // before truncation to the target N
  std::uint32_t components_used = 0;
  std::uint64_t aux_edge_count = 0;
  std::uint64_t admissible_edge_length = 0;
  std::uint64_t final_vertex_length = 0;
  double normalized_constant = 0.0;      // final_vertex_length * d / (n log d)
};

struct PipelineResult {
  PipelineParams params;
  std::vector<Vertex> path;
  bool certified = false;
  PipelineStats stats;
};

inline constexpr int kDefaultForestRounds = 6;

// End to end: split vertices, sample the graph, grow the induced linear
// forest in g[V1], build the auxiliary digraph over V2, run the conflict
// DFS, assemble and certify the final path. Degenerate corners (forest with
// < 2 components, no auxiliary edges) degrade to the best single component.
// Substreams are derived from `seed` with tags 1 (graph), 2 (split),
// 3 (forest).
PipelineResult full_pipeline(std::uint64_t n, double d, double eps, std::uint64_t seed,
                             PipelineMode mode, int forest_rounds = kDefaultForestRounds);

// Variant that reuses an already sampled graph and split (used by tests).
PipelineResult run_pipeline_on(const Graph& g, const VertexSplit& split,
                               const PipelineParams& params, std::uint64_t forest_seed,
                               int forest_rounds);

}  // namespace indpath
