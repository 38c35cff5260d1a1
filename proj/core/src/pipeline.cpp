#include "indpath/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "indpath/portable_math.hpp"
#include "indpath/rng.hpp"

namespace indpath {

void PipelineParams::validate() const {
  if (n < 2) throw std::invalid_argument("pipeline params: n >= 2 required");
  if (!(d >= 2.0)) throw std::invalid_argument("pipeline params: d >= 2 required");
  if (!(eps > 0.0) || !(eps < 1.0)) {
    throw std::invalid_argument("pipeline params: 0 < eps < 1 required");
  }
  if (segment_length < 1) throw std::invalid_argument("pipeline params: m >= 1 required");
  if (2ull * segment_length >= component_order) {
    throw std::invalid_argument("pipeline params: 2m < L required");
  }
  if (forest_order_target !=
      static_cast<std::uint64_t>(component_target) * component_order) {
    throw std::invalid_argument("pipeline params: k must equal N * L");
  }
}

PipelineParams make_pipeline_params(std::uint64_t n, double d, double eps,
                                    PipelineMode mode) {
  if (n < 2) throw std::invalid_argument("pipeline params: n >= 2 required");
  if (!(d >= 2.0)) throw std::invalid_argument("pipeline params: d >= 2 required");
  if (!(eps > 0.0) || !(eps < 1.0)) {
    throw std::invalid_argument("pipeline params: 0 < eps < 1 required");
  }

  PipelineParams params;
  params.n = n;
  params.d = d;
  params.eps = eps;
  params.p = d / static_cast<double>(n);
  params.mode = mode;

  const double log_d = portable_log(d);
  params.formula_component_order = std::sqrt(d) / std::pow(log_d, 5.0);
  params.formula_segment_length = eps * params.formula_component_order / 8.0;
  params.formula_forest_order =
      (1.5 - eps / 4.0) * (static_cast<double>(n) / d) * log_d;

  std::uint32_t L = 0;
  std::uint32_t m = 0;
  if (mode == PipelineMode::paper_faithful) {
    params.degenerate = params.formula_component_order < 3.0;
    if (params.degenerate) {
      // The asymptotic prescription is unusable here; run with the minimal
      // viable geometry and keep the flag.
      L = 3;
      m = 1;
    } else {
      L = static_cast<std::uint32_t>(std::llround(params.formula_component_order));
      m = static_cast<std::uint32_t>(std::llround(params.formula_segment_length));
    }
  } else {
    L = std::max<std::uint32_t>(3, static_cast<std::uint32_t>(std::llround(std::sqrt(d))));
    m = static_cast<std::uint32_t>(std::llround(eps * L / 8.0));
  }
  m = std::max<std::uint32_t>(1, m);
  m = std::min<std::uint32_t>(m, (L - 1) / 2);  // enforce 2m < L

  std::uint32_t N = static_cast<std::uint32_t>(
      std::llround(params.formula_forest_order / static_cast<double>(L)));
  N = std::max<std::uint32_t>(1, N);

  params.component_order = L;
  params.segment_length = m;
  params.component_target = N;
  params.forest_order_target = static_cast<std::uint64_t>(N) * L;
  params.validate();
  return params;
}

AuxiliaryDigraph build_aux_digraph(const Graph& g, const LinearForest& f,
                                   std::span<const Vertex> v2, std::uint32_t m) {
  if (f.components.empty()) {
    AuxiliaryDigraph empty;
    empty.conflicts.conflict_graph = Graph(0);
    return empty;
  }
  const std::size_t order = f.components.front().size();
  if (2ull * m >= order) throw std::invalid_argument("build_aux_digraph: need 2m < L");
  if (!verify_induced_forest(g, f, order)) {
    throw std::invalid_argument("build_aux_digraph: forest is not certified induced");
  }

  const Vertex n = g.vertex_count();
  const auto comp_count = static_cast<std::uint32_t>(f.components.size());

  // vertex -> (component, position) index over the forest.
  std::vector<std::int64_t> comp_of(n, -1);
  std::vector<std::uint32_t> pos_of(n, 0);
  for (std::uint32_t c = 0; c < comp_count; ++c) {
    const auto& comp = f.components[c];
    for (std::uint32_t i = 0; i < comp.size(); ++i) {
      comp_of[comp[i]] = c;
      pos_of[comp[i]] = i;
    }
  }

  // Conflict graph: host restricted to v2 (sorted), relabeled to rep ids.
  std::vector<Vertex> v2_sorted(v2.begin(), v2.end());
  std::sort(v2_sorted.begin(), v2_sorted.end());
  for (const Vertex a : v2_sorted) {
    if (a >= n) throw std::invalid_argument("build_aux_digraph: v2 vertex out of range");
    if (comp_of[a] != -1) {
      throw std::invalid_argument("build_aux_digraph: v2 intersects the forest");
    }
  }
  InducedSubgraph conflict = induced_subgraph(g, v2_sorted);

  struct PendingEdge {
    std::uint32_t rep;
    AuxEdgeWitness witness;
  };
  std::map<std::pair<Vertex, Vertex>, std::vector<PendingEdge>> pending;

  // Classify each candidate connector by its forest neighbors. A connector
  // qualifies iff it has exactly two forest edges, one into the tail segment
  // of one component and one into the head segment of another.
  for (std::uint32_t rep = 0; rep < v2_sorted.size(); ++rep) {
    const Vertex a = v2_sorted[rep];
    Vertex hit[2] = {0, 0};
    int hits = 0;
    for (const Vertex w : g.neighbors(a)) {
      if (comp_of[w] == -1) continue;
      if (hits == 2) {
        hits = 3;
        break;
      }
      hit[hits++] = w;
    }
    if (hits != 2) continue;
    const auto c0 = static_cast<std::uint32_t>(comp_of[hit[0]]);
    const auto c1 = static_cast<std::uint32_t>(comp_of[hit[1]]);
    if (c0 == c1) continue;
    enum class Zone { head, middle, tail };
    const auto tag = [&](Vertex w) {
      if (pos_of[w] < m) return Zone::head;
      if (pos_of[w] >= order - m) return Zone::tail;
      return Zone::middle;
    };
    const auto t0 = tag(hit[0]);
    const auto t1 = tag(hit[1]);
    Vertex attach_tail = 0, attach_head = 0;
    std::uint32_t src = 0, dst = 0;
    if (t0 == Zone::tail && t1 == Zone::head) {
      src = c0;
      dst = c1;
      attach_tail = hit[0];
      attach_head = hit[1];
    } else if (t0 == Zone::head && t1 == Zone::tail) {
      src = c1;
      dst = c0;
      attach_tail = hit[1];
      attach_head = hit[0];
    } else {
      continue;
    }
    pending[{src, dst}].push_back(
        {rep, AuxEdgeWitness{src, dst, a, attach_tail, attach_head}});
  }

  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(pending.size());
  for (const auto& [key, _] : pending) edges.push_back(key);

  AuxiliaryDigraph aux;
  aux.digraph = Digraph::from_edges(comp_count, edges);
  aux.conflicts.conflict_graph = std::move(conflict.graph);
  aux.rep_to_vertex = std::move(conflict.original_ids);
  aux.conflicts.lambda.resize(aux.digraph.edge_count());
  aux.witnesses.resize(aux.digraph.edge_count());
  for (Vertex u = 0; u < comp_count; ++u) {
    std::size_t eid = aux.digraph.first_edge_id(u);
    for (const Vertex v : aux.digraph.out_neighbors(u)) {
      const auto& list = pending.at({u, v});
      auto& lambda = aux.conflicts.lambda[eid];
      auto& wit = aux.witnesses[eid];
      lambda.reserve(list.size());
      wit.reserve(list.size());
      for (const auto& entry : list) {  // reps ascend: v2 scanned in order
        lambda.push_back(entry.rep);
        wit.push_back(entry.witness);
      }
      ++eid;
    }
  }
  aux.conflicts.validate(aux.digraph);
  return aux;
}

std::vector<Vertex> assemble_induced_path(const Graph& g, const LinearForest& f,
                                          const AdmissiblePath& ap,
                                          const AuxiliaryDigraph& aux, std::uint32_t m) {
  if (ap.vertices.empty()) return {};
  if (!validate_admissible_path(aux.digraph, aux.conflicts, ap)) {
    throw std::invalid_argument("assemble_induced_path: admissible path fails validation");
  }

  const auto position = [&](std::uint32_t comp, Vertex v) {
    const auto& c = f.components[comp];
    return static_cast<std::size_t>(std::find(c.begin(), c.end(), v) - c.begin());
  };

  // Locate and re-check the witness of each (edge, representative) pair: the
  // connector must be host-adjacent to both attachment vertices and the
  // attachments must sit in the proper segments.
  std::vector<const AuxEdgeWitness*> joins;
  for (std::size_t i = 0; i + 1 < ap.vertices.size(); ++i) {
    const auto eid = aux.digraph.edge_id(ap.vertices[i], ap.vertices[i + 1]);
    const auto& lambda = aux.conflicts.lambda[*eid];
    const auto it = std::find(lambda.begin(), lambda.end(), ap.representatives[i]);
    if (it == lambda.end()) {
      throw std::invalid_argument("assemble_induced_path: witness table inconsistent");
    }
    const AuxEdgeWitness& w = aux.witnesses[*eid][static_cast<std::size_t>(it - lambda.begin())];
    const std::size_t order = f.components[w.source_component].size();
    if (w.source_component != ap.vertices[i] || w.target_component != ap.vertices[i + 1] ||
        !g.has_edge(w.connector, w.attach_tail) || !g.has_edge(w.connector, w.attach_head) ||
        position(w.source_component, w.attach_tail) < order - m ||
        position(w.target_component, w.attach_head) >= m) {
      throw std::invalid_argument("assemble_induced_path: witness table inconsistent");
    }
    joins.push_back(&w);
  }

  std::vector<Vertex> path;
  for (std::size_t i = 0; i < ap.vertices.size(); ++i) {
    const auto comp = static_cast<std::uint32_t>(ap.vertices[i]);
    const auto& component = f.components[comp];
    const std::size_t from = (i == 0) ? 0 : position(comp, joins[i - 1]->attach_head);
    const std::size_t to =
        (i + 1 == ap.vertices.size()) ? component.size() - 1
                                      : position(comp, joins[i]->attach_tail);
    for (std::size_t j = from; j <= to; ++j) path.push_back(component[j]);
    if (i + 1 < ap.vertices.size()) path.push_back(joins[i]->connector);
  }
  return path;
}

PipelineResult full_pipeline(std::uint64_t n, double d, double eps, std::uint64_t seed,
                             PipelineMode mode, int forest_rounds) {
  const PipelineParams params = make_pipeline_params(n, d, eps, mode);
  const GnpParams gnp{static_cast<Vertex>(n), params.p};
  const Graph g = sample_gnp(gnp, CounterRng::derive(seed, 1));
  const VertexSplit split = split_vertices(static_cast<Vertex>(n), CounterRng::derive(seed, 2));
  return run_pipeline_on(g, split, params, CounterRng::derive(seed, 3), forest_rounds);
}

PipelineResult run_pipeline_on(const Graph& g, const VertexSplit& split,
                               const PipelineParams& params, std::uint64_t forest_seed,
                               int forest_rounds) {
  params.validate();
  PipelineResult result;
  result.params = params;

  LinearForest forest = build_induced_linear_forest(
      g, split.part_one, params.component_order, forest_rounds, forest_seed);
  result.stats.components_built = static_cast<std::uint32_t>(forest.components.size());
  if (forest.components.size() > params.component_target) {
    forest.components.resize(params.component_target);
  }
  result.stats.components_used = static_cast<std::uint32_t>(forest.components.size());
  result.stats.forest_order = forest.total_order();

  if (forest.components.empty()) {
    result.certified = true;  // empty path convention
    return result;
  }

  const AuxiliaryDigraph aux =
      build_aux_digraph(g, forest, split.part_two, params.segment_length);
  result.stats.aux_edge_count = aux.digraph.edge_count();

  const AdmissiblePath ap = find_admissible_path(aux.digraph, aux.conflicts);
  result.stats.admissible_edge_length = ap.edge_length();

  result.path = assemble_induced_path(g, forest, ap, aux, params.segment_length);
  result.stats.final_vertex_length = result.path.size();
  result.certified = is_induced_path(g, result.path);
  result.stats.normalized_constant =
      static_cast<double>(result.path.size()) * params.d /
      (static_cast<double>(params.n) * portable_log(params.d));
  return result;
}

}  // namespace indpath
