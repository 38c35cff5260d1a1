#include "indpath/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace indpath {

Graph Graph::from_edges(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g;
  g.n_ = n;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.targets_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.targets_[cursor[u]++] = v;
    g.targets_[cursor[v]++] = u;
  }
  for (Vertex v = 0; v < n; ++v) {
    std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  g.validate();
  return g;
}

Graph Graph::from_adjacency(const std::vector<std::vector<Vertex>>& adjacency) {
  Graph g;
  g.n_ = static_cast<Vertex>(adjacency.size());
  g.offsets_.assign(adjacency.size() + 1, 0);
  for (std::size_t v = 0; v < adjacency.size(); ++v) {
    g.offsets_[v + 1] = g.offsets_[v] + adjacency[v].size();
  }
  g.targets_.reserve(g.offsets_.back());
  for (const auto& list : adjacency) {
    g.targets_.insert(g.targets_.end(), list.begin(), list.end());
  }
  g.validate();
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Vertex Graph::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return static_cast<Vertex>(best);
}

void Graph::validate() const {
  if (offsets_.size() != static_cast<std::size_t>(n_) + 1 || offsets_[0] != 0 ||
      offsets_[n_] != targets_.size()) {
    throw std::invalid_argument("graph: malformed CSR offsets");
  }
  for (Vertex v = 0; v < n_; ++v) {
    const auto nb = neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const Vertex w = nb[i];
      if (w >= n_) throw std::invalid_argument("graph: neighbor out of range");
      if (w == v) throw std::invalid_argument("graph: self-loop");
      if (i > 0 && nb[i - 1] >= w) {
        throw std::invalid_argument("graph: neighbor list not strictly increasing");
      }
      if (!has_edge(w, v)) throw std::invalid_argument("graph: adjacency not symmetric");
    }
  }
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  const Vertex n = g.vertex_count();
  std::vector<std::int64_t> new_id(n, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex v = vertices[i];
    if (v >= n) throw std::invalid_argument("induced_subgraph: vertex out of range");
    if (new_id[v] != -1) throw std::invalid_argument("induced_subgraph: duplicate vertex");
    new_id[v] = static_cast<std::int64_t>(i);
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (const Vertex w : g.neighbors(vertices[i])) {
      const std::int64_t j = new_id[w];
      if (j >= 0 && static_cast<std::size_t>(j) > i) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  InducedSubgraph out;
  out.graph = Graph::from_edges(static_cast<Vertex>(vertices.size()), edges);
  out.original_ids.assign(vertices.begin(), vertices.end());
  return out;
}

bool is_induced_copy(const Graph& g, const Graph& pattern, std::span<const Vertex> mapping) {
  const Vertex k = pattern.vertex_count();
  if (mapping.size() != k) throw std::invalid_argument("is_induced_copy: mapping size mismatch");
  for (std::size_t i = 0; i < mapping.size(); ++i) {
    if (mapping[i] >= g.vertex_count()) {
      throw std::invalid_argument("is_induced_copy: image out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (mapping[i] == mapping[j]) {
        throw std::invalid_argument("is_induced_copy: mapping not injective");
      }
    }
  }
  for (Vertex x = 0; x < k; ++x) {
    for (Vertex y = x + 1; y < k; ++y) {
      if (pattern.has_edge(x, y) != g.has_edge(mapping[x], mapping[y])) return false;
    }
  }
  return true;
}

bool is_independent_set(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<std::uint8_t> in_set(g.vertex_count(), 0);
  for (const Vertex v : vertices) {
    if (v >= g.vertex_count()) throw std::invalid_argument("is_independent_set: out of range");
    in_set[v] = 1;
  }
  for (const Vertex v : vertices) {
    for (const Vertex w : g.neighbors(v)) {
      if (in_set[w]) return false;
    }
  }
  return true;
}

bool is_induced_path(const Graph& g, std::span<const Vertex> sequence) {
  if (sequence.empty()) return true;
  const Vertex n = g.vertex_count();
  std::vector<std::int64_t> pos(n, -1);
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const Vertex v = sequence[i];
    if (v >= n) return false;
    if (pos[v] != -1) return false;
    pos[v] = static_cast<std::int64_t>(i);
  }
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
    if (!g.has_edge(sequence[i], sequence[i + 1])) return false;
  }
  // No chords: every g-edge inside the sequence joins consecutive positions.
  for (const Vertex v : sequence) {
    for (const Vertex w : g.neighbors(v)) {
      if (pos[w] == -1) continue;
      const std::int64_t gap = pos[v] - pos[w];
      if (gap != 1 && gap != -1) return false;
    }
  }
  return true;
}

}  // namespace indpath
