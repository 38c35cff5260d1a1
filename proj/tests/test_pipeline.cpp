#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "indpath/pipeline.hpp"
#include "indpath/rng.hpp"
#include "support/independent_checks.hpp"
#include "support/patterns.hpp"

using namespace indpath;
using namespace indpath::testing;

namespace {

// Host with two directed forest components plus designated connector slots.
struct HandInstance {
  Graph g;
  LinearForest forest;
  std::vector<Vertex> v2;
};

// Components 0-1-2-3-4 and 5-6-7-8-9; vertices >= 10 are v2.
HandInstance hand_instance(std::vector<std::pair<Vertex, Vertex>> extra_edges,
                           Vertex v2_count) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i + 1 < 5; ++i) {
    edges.emplace_back(i, i + 1);
    edges.emplace_back(i + 5, i + 6);
  }
  edges.insert(edges.end(), extra_edges.begin(), extra_edges.end());
  HandInstance inst{Graph::from_edges(10 + v2_count, edges), {}, {}};
  inst.forest.components = {{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}};
  for (Vertex a = 0; a < v2_count; ++a) inst.v2.push_back(10 + a);
  return inst;
}

}  // namespace

TEST_CASE("make_pipeline_params") {
  SUBCASE("paper-faithful formulas degenerate at desk scale") {
    const auto params = make_pipeline_params(1000000, 400.0, 0.1, PipelineMode::paper_faithful);
    CHECK(params.degenerate);
    CHECK(params.formula_component_order == doctest::Approx(0.00259).epsilon(0.01));
    // Degenerate runs substitute the minimal viable geometry.
    CHECK(params.component_order == 3);
    CHECK(params.segment_length == 1);
    params.validate();
  }
  SUBCASE("practical mode at d = 400") {
    const auto params = make_pipeline_params(1000000, 400.0, 0.1, PipelineMode::practical);
    CHECK_FALSE(params.degenerate);
    CHECK(params.component_order == 20);
    CHECK(params.segment_length == 1);  // max(1, round(0.25))
    CHECK(params.forest_order_target % params.component_order == 0);
  }
  SUBCASE("practical mode at (n=1e5, d=64, eps=0.2)") {
    const auto params = make_pipeline_params(100000, 64.0, 0.2, PipelineMode::practical);
    CHECK(params.component_order == 8);
    CHECK(params.segment_length == 1);
    const double k_formula = (1.5 - 0.05) * (100000.0 / 64.0) * std::log(64.0);
    CHECK(std::abs(static_cast<double>(params.forest_order_target) - k_formula) <= 8.0);
    CHECK(params.forest_order_target % 8 == 0);
  }
  SUBCASE("2m < L always holds") {
    for (const double d : {4.0, 9.0, 16.0, 100.0, 1024.0}) {
      for (const double eps : {0.05, 0.25, 0.6, 0.95}) {
        const auto params = make_pipeline_params(10000, d, eps, PipelineMode::practical);
        CHECK(2u * params.segment_length < params.component_order);
        CHECK(params.segment_length >= 1);
      }
    }
  }
  SUBCASE("guards") {
    CHECK_THROWS(make_pipeline_params(1000, 1.0, 0.2, PipelineMode::practical));
    CHECK_THROWS(make_pipeline_params(1000, 16.0, 0.0, PipelineMode::practical));
    CHECK_THROWS(make_pipeline_params(1000, 16.0, 1.0, PipelineMode::practical));
  }
}

TEST_CASE("build_aux_digraph on hand-built hosts") {
  SUBCASE("one clean connector gives one edge") {
    // a = 10 adjacent exactly to the last vertex of component 0 and the
    // first vertex of component 1.
    const auto inst = hand_instance({{4, 10}, {5, 10}}, 2);
    const auto aux = build_aux_digraph(inst.g, inst.forest, inst.v2, 1);
    REQUIRE(aux.digraph.edge_count() == 1);
    const auto eid = aux.digraph.edge_id(0, 1);
    REQUIRE(eid.has_value());
    REQUIRE(aux.conflicts.lambda[*eid].size() == 1);
    const auto rep = aux.conflicts.lambda[*eid][0];
    CHECK(aux.rep_to_vertex[rep] == 10);
    const auto& w = aux.witnesses[*eid][0];
    CHECK(w.connector == 10);
    CHECK(w.attach_tail == 4);
    CHECK(w.attach_head == 5);
    CHECK(w.source_component == 0);
    CHECK(w.target_component == 1);
  }
  SUBCASE("two edges into the same tail segment disqualify the connector") {
    const auto inst = hand_instance({{4, 10}, {3, 10}, {5, 10}}, 2);
    const auto aux = build_aux_digraph(inst.g, inst.forest, inst.v2, 2);
    CHECK(aux.digraph.edge_count() == 0);
  }
  SUBCASE("an edge into the middle of the forest disqualifies the connector") {
    const auto inst = hand_instance({{4, 10}, {5, 10}, {2, 10}}, 2);
    const auto aux = build_aux_digraph(inst.g, inst.forest, inst.v2, 1);
    CHECK(aux.digraph.edge_count() == 0);
  }
  SUBCASE("head-to-tail orientation flips the edge") {
    // a adjacent to the head of component 0 and the tail of component 1:
    // that connects component 1 to component 0.
    const auto inst = hand_instance({{0, 10}, {9, 10}}, 2);
    const auto aux = build_aux_digraph(inst.g, inst.forest, inst.v2, 1);
    REQUIRE(aux.digraph.edge_count() == 1);
    CHECK(aux.digraph.edge_id(1, 0).has_value());
  }
  SUBCASE("uncertified forest is rejected") {
    auto inst = hand_instance({{4, 10}, {5, 10}, {2, 7}}, 2);  // cross edge
    CHECK_THROWS(build_aux_digraph(inst.g, inst.forest, inst.v2, 1));
  }
  SUBCASE("v2 overlapping the forest is rejected") {
    const auto inst = hand_instance({{4, 10}, {5, 10}}, 2);
    const std::vector<Vertex> bad_v2{9, 10};
    CHECK_THROWS(build_aux_digraph(inst.g, inst.forest, bad_v2, 1));
  }
}

TEST_CASE("aux digraph matches a full re-scan oracle on random instances") {
  CounterRng rng(616);
  for (int trial = 0; trial < 20; ++trial) {
    const Vertex n = 60;
    const Graph g = sample_gnp({n, 0.08}, rng.next_u64());
    const VertexSplit split = split_vertices(n, rng.next_u64());
    const std::uint32_t order = 5, m = 2;
    const LinearForest forest =
        build_induced_linear_forest(g, split.part_one, order, 3, rng.next_u64());
    if (forest.components.empty()) continue;
    const auto aux = build_aux_digraph(g, forest, split.part_two, m);

    // Brute force: for every (ordered component pair, candidate a), decide
    // a-connectedness by direct definition and compare with the built table.
    std::set<Vertex> forest_set;
    for (const auto& comp : forest.components) {
      forest_set.insert(comp.begin(), comp.end());
    }
    std::size_t expected_edges = 0;
    for (std::uint32_t c1 = 0; c1 < forest.components.size(); ++c1) {
      for (std::uint32_t c2 = 0; c2 < forest.components.size(); ++c2) {
        if (c1 == c2) continue;
        std::vector<Vertex> reps;
        const auto tail = segment(forest.components[c1], SegmentEnd::tail, m);
        const auto head = segment(forest.components[c2], SegmentEnd::head, m);
        for (const Vertex a : split.part_two) {
          int into_tail = 0, into_head = 0, elsewhere = 0;
          for (const Vertex w : g.neighbors(a)) {
            if (!forest_set.count(w)) continue;
            if (std::find(tail.begin(), tail.end(), w) != tail.end()) {
              ++into_tail;
            } else if (std::find(head.begin(), head.end(), w) != head.end()) {
              ++into_head;
            } else {
              ++elsewhere;
            }
          }
          if (into_tail == 1 && into_head == 1 && elsewhere == 0) reps.push_back(a);
        }
        const auto eid = aux.digraph.edge_id(c1, c2);
        if (reps.empty()) {
          REQUIRE_FALSE(eid.has_value());
        } else {
          ++expected_edges;
          REQUIRE(eid.has_value());
          std::vector<Vertex> built;
          for (const auto rep : aux.conflicts.lambda[*eid]) {
            built.push_back(aux.rep_to_vertex[rep]);
          }
          REQUIRE(built == reps);
        }
      }
    }
    REQUIRE(aux.digraph.edge_count() == expected_edges);
  }
}

TEST_CASE("assemble_induced_path trim rule") {
  SUBCASE("attachment at the extreme ends keeps everything") {
    const auto inst = hand_instance({{4, 10}, {5, 10}}, 2);
    const auto aux = build_aux_digraph(inst.g, inst.forest, inst.v2, 1);
    const AdmissiblePath ap{{0, 1}, {aux.conflicts.lambda[0][0]}};
    const auto path = assemble_induced_path(inst.g, inst.forest, ap, aux, 1);
    CHECK(path.size() == 11);  // 5 + connector + 5
    CHECK(path == std::vector<Vertex>{0, 1, 2, 3, 4, 10, 5, 6, 7, 8, 9});
    CHECK(is_induced_path(inst.g, path));
  }
  SUBCASE("inner attachments trim one vertex each side") {
    // a adjacent to position 3 of component 0 (4th vertex) and position 1 of
    // component 1 (2nd vertex); m = 2 puts both inside segments.
    const auto inst = hand_instance({{3, 10}, {6, 10}}, 2);
    const auto aux = build_aux_digraph(inst.g, inst.forest, inst.v2, 2);
    REQUIRE(aux.digraph.edge_count() == 1);
    const AdmissiblePath ap{{0, 1}, {aux.conflicts.lambda[0][0]}};
    const auto path = assemble_induced_path(inst.g, inst.forest, ap, aux, 2);
    CHECK(path.size() == 9);  // 4 + connector + 4
    CHECK(path == std::vector<Vertex>{0, 1, 2, 3, 10, 6, 7, 8, 9});
    CHECK(is_induced_path(inst.g, path));
  }
  SUBCASE("invalid admissible paths and missing witnesses are rejected") {
    const auto inst = hand_instance({{4, 10}, {5, 10}}, 2);
    const auto aux = build_aux_digraph(inst.g, inst.forest, inst.v2, 1);
    CHECK_THROWS(assemble_induced_path(inst.g, inst.forest, {{1, 0}, {0}}, aux, 1));
    CHECK_THROWS(assemble_induced_path(inst.g, inst.forest, {{0, 1}, {7}}, aux, 1));
  }
}

TEST_CASE("full_pipeline fixture regression (n=2000, d=16)") {
  const PipelineResult r = full_pipeline(2000, 16.0, 0.25, 7, PipelineMode::practical);
  CHECK(r.certified);
  CHECK(is_induced_path(sample_gnp({2000, 16.0 / 2000.0}, CounterRng::derive(7, 1)), r.path));
  // Frozen from the first blessed run.
  CHECK(r.stats.forest_order == 256);
  CHECK(r.stats.aux_edge_count == 28);
  CHECK(r.stats.admissible_edge_length == 3);
  CHECK(r.stats.final_vertex_length == 19);
}

TEST_CASE("degenerate corners degrade to a single component") {
  // Two isolated P3's in V1 and no candidate connectors at all: the aux
  // digraph is edgeless, so the result is one whole component.
  std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {1, 2}, {3, 4}, {4, 5}};
  const Graph g = Graph::from_edges(8, edges);
  VertexSplit split;
  split.part_one = {0, 1, 2, 3, 4, 5};
  split.part_two = {6, 7};
  PipelineParams params = make_pipeline_params(8, 3.0, 0.25, PipelineMode::practical);
  const PipelineResult r = run_pipeline_on(g, split, params, 5, 3);
  CHECK(r.certified);
  CHECK(r.stats.final_vertex_length == 3);
  CHECK(is_induced_path(g, r.path));
}

TEST_CASE("empty forest yields an empty certified path") {
  const Graph g = make_empty(8);
  VertexSplit split;
  split.part_one = {0, 1, 2, 3};
  split.part_two = {4, 5, 6, 7};
  PipelineParams params = make_pipeline_params(8, 3.0, 0.25, PipelineMode::practical);
  const PipelineResult r = run_pipeline_on(g, split, params, 5, 3);
  CHECK(r.certified);
  CHECK(r.path.empty());
}

TEST_CASE("pipeline certification fuzz grid with independent validation") {
  for (const std::uint64_t n : {500ull, 2000ull}) {
    for (const double d : {8.0, 16.0}) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const PipelineResult r =
            full_pipeline(n, d, 0.25, CounterRng::derive(seed, n), PipelineMode::practical, 3);
        REQUIRE(r.certified);

        const Graph g = sample_gnp({static_cast<Vertex>(n), d / static_cast<double>(n)},
                                   CounterRng::derive(CounterRng::derive(seed, n), 1));
        REQUIRE(induced_path_shape(g, r.path));
        if (n <= 500) REQUIRE(induced_path_matrix(g, r.path));

        // Length accounting: at least (admissible vertices) * (L - 2m).
        if (r.stats.final_vertex_length > 0) {
          const auto ap_vertices = r.stats.admissible_edge_length + 1;
          REQUIRE(r.stats.final_vertex_length >=
                  ap_vertices * (r.params.component_order - 2 * r.params.segment_length));
        }

        // Connector soundness: the connectors used are exactly the path
        // vertices outside the forest; they must be pairwise independent and
        // have exactly two edges into the forest.
        const VertexSplit split = split_vertices(
            static_cast<Vertex>(n), CounterRng::derive(CounterRng::derive(seed, n), 2));
        std::set<Vertex> v1(split.part_one.begin(), split.part_one.end());
        std::vector<Vertex> connectors;
        std::set<Vertex> path_forest;
        for (const Vertex v : r.path) {
          if (v1.count(v)) path_forest.insert(v);
        }
        for (const Vertex v : r.path) {
          if (!v1.count(v)) connectors.push_back(v);
        }
        REQUIRE(is_independent_set(g, connectors));
        for (const Vertex a : connectors) {
          int forest_edges = 0;
          for (const Vertex w : g.neighbors(a)) {
            if (path_forest.count(w)) ++forest_edges;
          }
          REQUIRE(forest_edges == 2);
        }
      }
    }
  }
}
