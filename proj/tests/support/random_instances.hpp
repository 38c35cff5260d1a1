#pragma once

// Seeded random conflict-DFS instances for fuzz and guarantee tests.

#include <utility>
#include <vector>

#include "indpath/conflict_dfs.hpp"
#include "indpath/rng.hpp"

namespace indpath::testing {

struct ConflictInstance {
  Digraph digraph;
  ConflictSystem conflicts;
};

// Digraph edge density, representative-set size and conflict density are
// drawn per instance so the corpus mixes sparse hopeless instances with
// dense ones where the expansion hypothesis actually holds.
inline ConflictInstance random_conflict_instance(std::uint64_t seed, Vertex max_n,
                                                 Vertex max_reps) {
  CounterRng rng(seed);
  const Vertex n = 2 + static_cast<Vertex>(rng.next_below(max_n - 1));
  const Vertex reps = 1 + static_cast<Vertex>(rng.next_below(max_reps));
  const double edge_probs[] = {0.3, 0.6, 1.0};
  const double conflict_probs[] = {0.0, 0.1, 0.3};
  const double edge_prob = edge_probs[rng.next_below(3)];
  const double conflict_prob = conflict_probs[rng.next_below(3)];
  const std::size_t lambda_hi = 1 + rng.next_below(3);  // up to 3 reps per edge

  const auto edge_threshold = CounterRng::bernoulli_threshold(edge_prob);
  const auto conflict_threshold = CounterRng::bernoulli_threshold(conflict_prob);

  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && rng.next_bernoulli(edge_threshold)) arcs.emplace_back(u, v);
    }
  }
  ConflictInstance inst;
  inst.digraph = Digraph::from_edges(n, arcs);

  std::vector<std::pair<Vertex, Vertex>> conflicts;
  for (Vertex a = 0; a < reps; ++a) {
    for (Vertex b = a + 1; b < reps; ++b) {
      if (rng.next_bernoulli(conflict_threshold)) conflicts.emplace_back(a, b);
    }
  }
  inst.conflicts.conflict_graph = Graph::from_edges(reps, conflicts);

  inst.conflicts.lambda.resize(inst.digraph.edge_count());
  for (auto& lambda : inst.conflicts.lambda) {
    const std::size_t want = rng.next_below(lambda_hi + 1);
    std::vector<std::uint8_t> in(reps, 0);
    for (std::size_t i = 0; i < want; ++i) in[rng.next_below(reps)] = 1;
    for (Vertex y = 0; y < reps; ++y) {
      if (in[y]) lambda.push_back(y);
    }
  }
  return inst;
}

}  // namespace indpath::testing
