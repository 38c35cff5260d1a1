#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "indpath/conflict_dfs.hpp"
#include "indpath/graph.hpp"
#include "indpath/intersection_profile.hpp"

namespace indpath {

// Exhaustive small-instance ground truth. Every operation carries a hard
// size guard and throws std::invalid_argument beyond it; these exist to
// certify tests, not to scale.

struct InducedPathResult {
  std::size_t edge_length = 0;
  std::vector<Vertex> witness;
};

// Longest induced path via exhaustive chord-free path extension. n <= 16.
InducedPathResult max_induced_path_exact(const Graph& g);

// Independent second method: enumerate vertex subsets and test whether the
// induced subgraph is a path graph. n <= 16.
InducedPathResult max_induced_path_by_subsets(const Graph& g);

// Maximum number of vertices over subsets inducing a disjoint union of
// copies of the tree pattern. n <= 14; throws if pattern is not a tree.
std::size_t max_induced_tmatching_exact(const Graph& g, const Graph& t_pattern);

// Number of injections sigma with the pattern forest mapped to an induced
// copy. |pattern| <= 8, n <= 12.
std::uint64_t count_labelled_induced_copies(const Graph& g, const Graph& pattern);

// For a fixed placement sigma0 of the pattern into [n], counts all
// compatible injections by the (s, c) profile of their overlap with sigma0.
// Compatibility: shared pairs agree on edge/non-edge status. |pattern| <= 7,
// n <= 12.
std::map<IntersectionProfile, std::uint64_t> enumerate_compatible_by_profile(
    const Graph& pattern, std::span<const Vertex> sigma0, Vertex n);

// Number of size-s vertex sets containing v which induce a tree in h.
// n <= 12.
std::uint64_t count_subtrees_containing(const Graph& h, Vertex v, std::size_t s);

// Brute-force longest admissible path over all directed paths and all
// representative selections. Digraph order <= 8, |V(C)| <= 12.
struct AdmissibleSearchResult {
  std::size_t edge_length = 0;
  std::vector<Vertex> path;
  std::vector<std::uint32_t> representatives;
};

AdmissibleSearchResult longest_admissible_path_exact(const Digraph& d,
                                                     const ConflictSystem& cs);

}  // namespace indpath
