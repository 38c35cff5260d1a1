#pragma once

// Small graph constructors and an unlabeled-tree enumerator shared by the
// test suites. Everything here is test-side and intentionally independent of
// the library's internals.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "indpath/graph.hpp"

namespace indpath::testing {

inline Graph make_path(Vertex k) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(k, edges);
}

inline Graph make_cycle(Vertex k) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  if (k >= 3) edges.emplace_back(Vertex{0}, static_cast<Vertex>(k - 1));
  return Graph::from_edges(k, edges);
}

inline Graph make_complete(Vertex k) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < k; ++i) {
    for (Vertex j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_edges(k, edges);
}

inline Graph make_star(Vertex k) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 1; i < k; ++i) edges.emplace_back(Vertex{0}, i);
  return Graph::from_edges(k, edges);
}

inline Graph make_empty(Vertex k) { return Graph(k); }

// Rooted AHU code, test-side copy so oracle tests do not depend on the
// library's own canonicalization.
inline std::string ahu(const Graph& g, Vertex root, Vertex parent) {
  std::vector<std::string> child;
  for (const Vertex w : g.neighbors(root)) {
    if (parent != static_cast<Vertex>(-1) && w == parent) continue;
    child.push_back(ahu(g, w, root));
  }
  std::sort(child.begin(), child.end());
  std::string code = "(";
  for (const auto& c : child) code += c;
  return code + ")";
}

inline std::string tree_code(const Graph& tree) {
  std::string best;
  for (Vertex r = 0; r < tree.vertex_count(); ++r) {
    std::string code = ahu(tree, r, static_cast<Vertex>(-1));
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

// All unlabeled trees of order k with maximum degree <= max_degree, by
// decoding every Prufer sequence and deduplicating canonical codes.
inline std::vector<Graph> all_trees(Vertex k, Vertex max_degree) {
  std::vector<Graph> out;
  if (k == 0) return out;
  if (k == 1) {
    out.push_back(make_empty(1));
    return out;
  }
  if (k == 2) {
    if (max_degree >= 1) out.push_back(make_path(2));
    return out;
  }
  std::map<std::string, Graph> by_code;
  std::vector<Vertex> seq(k - 2, 0);
  for (;;) {
    // Decode the Prufer sequence.
    std::vector<int> degree(k, 1);
    for (const Vertex x : seq) ++degree[x];
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<bool> used(k, false);
    for (const Vertex x : seq) {
      for (Vertex leaf = 0; leaf < k; ++leaf) {
        if (degree[leaf] == 1 && !used[leaf]) {
          edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
          used[leaf] = true;
          --degree[x];
          break;
        }
      }
    }
    Vertex last[2];
    int found = 0;
    for (Vertex v = 0; v < k; ++v) {
      if (!used[v] && degree[v] == 1) last[found++] = v;
    }
    edges.emplace_back(last[0], last[1]);
    Graph tree = Graph::from_edges(k, edges);
    if (tree.max_degree() <= max_degree) {
      by_code.emplace(tree_code(tree), std::move(tree));
    }
    // Next sequence.
    std::size_t i = 0;
    while (i < seq.size() && seq[i] + 1 == k) seq[i++] = 0;
    if (i == seq.size()) break;
    ++seq[i];
  }
  for (auto& [code, tree] : by_code) out.push_back(std::move(tree));
  return out;
}

}  // namespace indpath::testing
