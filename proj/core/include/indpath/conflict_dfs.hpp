#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "indpath/graph.hpp"

namespace indpath {

// Directed simple graph, CSR out-adjacency with strictly increasing lists.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(Vertex n) : n_(n), offsets_(static_cast<std::size_t>(n) + 1, 0) {}

  static Digraph from_edges(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges);

  Vertex vertex_count() const { return n_; }
  std::size_t edge_count() const { return targets_.size(); }

  std::span<const Vertex> out_neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

  std::size_t out_degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  // Position of edge (u, v) in the global edge enumeration (CSR order), or
  // nullopt if absent. This index keys the conflict system's assignment.
  std::optional<std::size_t> edge_id(Vertex u, Vertex v) const;

  std::size_t first_edge_id(Vertex u) const { return offsets_[u]; }

  void validate() const;

 private:
  Vertex n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
};

// A conflict graph C over representative ids together with an assignment
// from digraph edges to candidate-representative sets. lambda[e] is the
// sorted representative list of the edge with id e (CSR position); it is
// defined (possibly empty) for every edge.
struct ConflictSystem {
  Graph conflict_graph;
  std::vector<std::vector<std::uint32_t>> lambda;

  std::span<const std::uint32_t> lambda_of(std::size_t edge_id) const {
    return lambda[edge_id];
  }

  void validate(const Digraph& d) const;
};

// A digraph path whose consecutive edges carry distinct representatives,
// each drawn from its edge's assignment, forming an independent set in C.
struct AdmissiblePath {
  std::vector<Vertex> vertices;
  std::vector<std::uint32_t> representatives;  // one per consecutive edge

  std::size_t edge_length() const {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }
};

bool validate_admissible_path(const Digraph& d, const ConflictSystem& cs,
                              const AdmissiblePath& path);

// State of the conflict-encoding DFS. Vertices are partitioned into
// explored (S), on the stack (U) and unvisited (T); `chosen` is the monotone
// set X of all representatives ever selected. stack_reps holds the
// representatives matched to consecutive stack edges, so the stack with
// stack_reps is an AdmissiblePath at every step; its entries stay in
// `chosen` even after the stack retreats.
struct DfsState {
  enum class Location : std::uint8_t { unvisited, on_stack, explored };

  std::vector<Location> location;
  std::vector<Vertex> stack;
  std::vector<std::uint32_t> stack_reps;        // size max(|stack|-1, 0)
  std::vector<std::uint8_t> chosen;             // X, indicator over V(C)
  std::vector<std::uint32_t> chosen_order;      // X in insertion order
  std::vector<std::uint32_t> conflict_pressure; // per rep: #C-neighbors in X
  std::size_t unvisited_count = 0;
  std::size_t explored_count = 0;
  Vertex next_unvisited_hint = 0;

  bool terminated() const { return stack.empty() && unvisited_count == 0; }
  std::size_t stack_size() const { return stack.size(); }

  AdmissiblePath current_path() const { return {stack, stack_reps}; }
};

DfsState make_dfs_state(const Digraph& d, const ConflictSystem& cs);

// One round of the search: exactly one vertex moves, either unvisited ->
// stack (appending a representative when the stack was nonempty) or stack ->
// explored. Ties break by ascending vertex index and ascending
// representative id. Throws std::logic_error if already terminated.
void dfs_step(DfsState& state, const Digraph& d, const ConflictSystem& cs);

// Runs the full search and returns the longest stack observed (the first
// one of maximal size, so the result is deterministic). Equivalent to
// iterating dfs_step until termination; internally uses persistent cursors,
// which is safe because eligibility is monotone: vertices never re-enter T
// and X only grows.
AdmissiblePath find_admissible_path(const Digraph& d, const ConflictSystem& cs);

// Exhaustively decides the expansion hypothesis: for every pair of disjoint
// k-subsets S, T of digraph vertices and every X subset of V(C) with |X| <=
// min(x_cap, |V(C)|), some edge from S to T has a representative outside X
// with no conflict-graph edge into X. Requires the digraph order <= 8,
// |V(C)| <= 12 and x_cap <= order - 1. Vacuously true when no disjoint
// k-subsets exist.
bool check_expansion_hypothesis(const Digraph& d, const ConflictSystem& cs, int k,
                                int x_cap);

// Interchange format: header "N M R", then M lines "u v r1 r2 ..." (one
// digraph edge and its representative set), then conflict-graph edges
// "a b" until end of input.
void write_conflict_instance(std::ostream& out, const Digraph& d, const ConflictSystem& cs);
std::pair<Digraph, ConflictSystem> read_conflict_instance(std::istream& in);

}  // namespace indpath
