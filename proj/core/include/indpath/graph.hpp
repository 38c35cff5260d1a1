#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace indpath {

using Vertex = std::uint32_t;

// Undirected simple graph on vertices 0..n-1, stored as CSR adjacency with
// strictly increasing neighbor lists. Immutable after construction; safe to
// share read-only across threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex n) : n_(n), offsets_(static_cast<std::size_t>(n) + 1, 0) {}

  // Builds from an edge list. Edges may be given in either orientation but
  // must be in range, loop-free and duplicate-free.
  static Graph from_edges(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges);

  static Graph from_adjacency(const std::vector<std::vector<Vertex>>& adjacency);

  Vertex vertex_count() const { return n_; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(Vertex u, Vertex v) const;

  Vertex max_degree() const;

  // Checks every structural invariant (symmetry, sortedness, no loops,
  // indices in range); throws std::invalid_argument on any violation.
  // Called on every construction path.
  void validate() const;

 private:
  Vertex n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original_ids;  // new index i was original_ids[i]
};

// Subgraph induced by `vertices` (distinct, in range), relabeled so that new
// vertex i corresponds to vertices[i].
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// True iff `mapping` (pattern vertex i -> mapping[i]) carries the pattern to
// an induced copy: adjacency is preserved in both directions for every pair.
// Throws if the mapping is not an in-range injection on all pattern vertices.
bool is_induced_copy(const Graph& g, const Graph& pattern, std::span<const Vertex> mapping);

// True iff no edge of g has both endpoints in `vertices`. Throws on
// out-of-range indices.
bool is_independent_set(const Graph& g, std::span<const Vertex> vertices);

// True iff the sequence is a chord-free path of g: vertices distinct and in
// range, consecutive pairs adjacent, no other pair adjacent. Total on all
// inputs; malformed sequences return false. Empty and single-vertex
// sequences are paths.
bool is_induced_path(const Graph& g, std::span<const Vertex> sequence);

}  // namespace indpath
