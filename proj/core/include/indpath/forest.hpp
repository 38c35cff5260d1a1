#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "indpath/graph.hpp"

namespace indpath {

// Ordered, directed, vertex-disjoint paths whose union induces exactly its
// own edges in the host graph: no chords inside a component, no edges
// between components. The direction of each component is the order in which
// the builder grew it and is fixed thereafter.
struct LinearForest {
  std::vector<std::vector<Vertex>> components;

  std::size_t total_order() const {
    std::size_t sum = 0;
    for (const auto& c : components) sum += c.size();
    return sum;
  }
};

enum class SegmentEnd { head, tail };

// First (head) or last (tail) m vertices of a component, in path direction.
// Requires 2m < |component| so head and tail are disjoint with a gap.
std::vector<Vertex> segment(const std::vector<Vertex>& component, SegmentEnd end,
                            std::size_t m);

// Randomized greedy growth with retirement: repeatedly grow a path by a
// random eligible extension (a free neighbor of the current endpoint with no
// other edge into the path and none into the committed forest); a path that
// stalls before reaching order L burns its vertices for the rest of the
// round. max_rounds independent restarts, each from a per-round derived
// substream; the best forest over all rounds is kept (ties go to the
// earlier round, so more rounds never lose ground). Every component of the
// result has order exactly L. May return an empty forest.
LinearForest build_induced_linear_forest(const Graph& g, std::span<const Vertex> allowed,
                                         std::uint32_t component_order, int max_rounds,
                                         std::uint64_t seed);

// Re-checks every LinearForest invariant against g from scratch; when
// expected_order is given, also that all components have exactly that order.
bool verify_induced_forest(const Graph& g, const LinearForest& f,
                           std::optional<std::size_t> expected_order = std::nullopt);

// achieved_order / (p^-1 log(n p)), the achieved fraction of the natural
// order scale for induced linear forests in G(n, p).
double normalized_forest_order(const LinearForest& f, double n, double p);

}  // namespace indpath
