#include "indpath/oracles.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace indpath {

namespace {

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> masks(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (const Vertex w : g.neighbors(v)) masks[v] |= 1u << w;
  }
  return masks;
}

bool connected_in_mask(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
  if (mask == 0) return false;
  std::uint32_t frontier = mask & (~mask + 1);  // lowest set bit
  std::uint32_t reached = frontier;
  while (frontier) {
    std::uint32_t next = 0;
    std::uint32_t scan = frontier;
    while (scan) {
      const int v = std::countr_zero(scan);
      scan &= scan - 1;
      next |= adj[v] & mask;
    }
    frontier = next & ~reached;
    reached |= next;
  }
  return (reached & mask) == mask;
}

std::size_t edges_in_mask(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
  std::size_t twice = 0;
  std::uint32_t scan = mask;
  while (scan) {
    const int v = std::countr_zero(scan);
    scan &= scan - 1;
    twice += static_cast<std::size_t>(std::popcount(adj[v] & mask));
  }
  return twice / 2;
}

// AHU canonical code of a tree given by adjacency masks restricted to
// `mask`, rooted at `root`.
std::string ahu_code(const std::vector<std::uint32_t>& adj, std::uint32_t mask, int root,
                     int parent) {
  std::vector<std::string> child_codes;
  std::uint32_t scan = adj[root] & mask;
  while (scan) {
    const int w = std::countr_zero(scan);
    scan &= scan - 1;
    if (w == parent) continue;
    child_codes.push_back(ahu_code(adj, mask, w, root));
  }
  std::sort(child_codes.begin(), child_codes.end());
  std::string code = "(";
  for (const auto& c : child_codes) code += c;
  code += ")";
  return code;
}

// Canonical code of an (assumed) tree on `mask`: min AHU code over its one
// or two centers.
std::string tree_canonical_code(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
  const int size = std::popcount(mask);
  if (size == 1) return "()";
  // Peel leaves until <= 2 vertices remain.
  std::uint32_t remaining = mask;
  while (std::popcount(remaining) > 2) {
    std::uint32_t leaves = 0;
    std::uint32_t scan = remaining;
    while (scan) {
      const int v = std::countr_zero(scan);
      scan &= scan - 1;
      if (std::popcount(adj[v] & remaining) == 1) leaves |= 1u << v;
    }
    remaining &= ~leaves;
  }
  std::string best;
  std::uint32_t scan = remaining;
  while (scan) {
    const int center = std::countr_zero(scan);
    scan &= scan - 1;
    std::string code = ahu_code(adj, mask, center, -1);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

InducedPathResult max_induced_path_exact(const Graph& g) {
  const Vertex n = g.vertex_count();
  require(n <= 16, "max_induced_path_exact: instance too large (n <= 16)");
  if (n == 0) return {};
  const auto adj = adjacency_masks(g);

  InducedPathResult best;
  std::vector<Vertex> current;
  best.witness = {0};  // single vertex is always an induced path

  // Extend a chord-free path: the next vertex must be adjacent to the tip
  // and to no earlier path vertex. `forbidden` accumulates path vertices and
  // the neighborhoods of all non-tip path vertices.
  auto extend = [&](auto&& self, Vertex tip, std::uint32_t forbidden) -> void {
    if (current.size() > best.witness.size()) {
      best.witness = current;
      best.edge_length = current.size() - 1;
    }
    std::uint32_t options = adj[tip] & ~forbidden;
    while (options) {
      const int v = std::countr_zero(options);
      options &= options - 1;
      current.push_back(static_cast<Vertex>(v));
      self(self, static_cast<Vertex>(v), forbidden | adj[tip] | (1u << tip));
      current.pop_back();
    }
  };

  for (Vertex v = 0; v < n; ++v) {
    current.assign(1, v);
    extend(extend, v, 1u << v);
  }
  return best;
}

InducedPathResult max_induced_path_by_subsets(const Graph& g) {
  const Vertex n = g.vertex_count();
  require(n <= 16, "max_induced_path_by_subsets: instance too large (n <= 16)");
  if (n == 0) return {};
  const auto adj = adjacency_masks(g);

  std::uint32_t best_mask = 1;  // any single vertex
  int best_size = 1;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best_size) continue;
    if (edges_in_mask(adj, mask) != static_cast<std::size_t>(size) - 1) continue;
    bool degrees_ok = true;
    std::uint32_t scan = mask;
    while (scan) {
      const int v = std::countr_zero(scan);
      scan &= scan - 1;
      if (std::popcount(adj[v] & mask) > 2) {
        degrees_ok = false;
        break;
      }
    }
    if (!degrees_ok) continue;
    if (!connected_in_mask(adj, mask)) continue;
    best_mask = mask;
    best_size = size;
  }

  // Reconstruct the order by walking from an endpoint.
  InducedPathResult out;
  int start = std::countr_zero(best_mask);
  std::uint32_t scan = best_mask;
  while (scan) {
    const int v = std::countr_zero(scan);
    scan &= scan - 1;
    if (std::popcount(adj[v] & best_mask) <= 1) {
      start = v;
      break;
    }
  }
  std::uint32_t visited = 0;
  int v = start;
  for (int i = 0; i < best_size; ++i) {
    out.witness.push_back(static_cast<Vertex>(v));
    visited |= 1u << v;
    const std::uint32_t next = adj[v] & best_mask & ~visited;
    if (next == 0) break;
    v = std::countr_zero(next);
  }
  out.edge_length = out.witness.size() - 1;
  return out;
}

std::size_t max_induced_tmatching_exact(const Graph& g, const Graph& t_pattern) {
  const Vertex n = g.vertex_count();
  const Vertex k = t_pattern.vertex_count();
  require(n <= 14, "max_induced_tmatching_exact: instance too large (n <= 14)");
  require(k >= 1 && k <= 14, "max_induced_tmatching_exact: pattern order must be in [1, 14]");
  const auto pattern_adj = adjacency_masks(t_pattern);
  const std::uint32_t full_pattern = (k >= 32) ? ~0u : ((1u << k) - 1);
  require(t_pattern.edge_count() == static_cast<std::size_t>(k) - 1 &&
              (k == 1 || connected_in_mask(pattern_adj, full_pattern)),
          "max_induced_tmatching_exact: pattern is not a tree");
  const std::string pattern_code = tree_canonical_code(pattern_adj, full_pattern);

  const auto adj = adjacency_masks(g);
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const std::size_t size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= best || size % k != 0) continue;
    // Every component must be a copy of the pattern tree.
    bool ok = true;
    std::uint32_t rest = mask;
    while (rest && ok) {
      std::uint32_t frontier = rest & (~rest + 1);
      std::uint32_t comp = frontier;
      while (frontier) {
        std::uint32_t next = 0;
        std::uint32_t scan = frontier;
        while (scan) {
          const int v = std::countr_zero(scan);
          scan &= scan - 1;
          next |= adj[v] & mask;
        }
        frontier = next & ~comp;
        comp |= next;
      }
      rest &= ~comp;
      if (std::popcount(comp) != static_cast<int>(k) ||
          edges_in_mask(adj, comp) != static_cast<std::size_t>(k) - 1 ||
          tree_canonical_code(adj, comp) != pattern_code) {
        ok = false;
      }
    }
    if (ok) best = size;
  }
  return best;
}

std::uint64_t count_labelled_induced_copies(const Graph& g, const Graph& pattern) {
  const Vertex n = g.vertex_count();
  const Vertex k = pattern.vertex_count();
  require(k <= 8, "count_labelled_induced_copies: pattern too large (k <= 8)");
  require(n <= 12, "count_labelled_induced_copies: instance too large (n <= 12)");
  if (k > n) return 0;

  std::uint64_t count = 0;
  std::vector<Vertex> image(k);
  std::vector<std::uint8_t> used(n, 0);
  auto place = [&](auto&& self, Vertex i) -> void {
    if (i == k) {
      ++count;
      return;
    }
    for (Vertex w = 0; w < n; ++w) {
      if (used[w]) continue;
      bool ok = true;
      for (Vertex j = 0; j < i; ++j) {
        if (pattern.has_edge(i, j) != g.has_edge(w, image[j])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[i] = w;
      used[w] = 1;
      self(self, i + 1);
      used[w] = 0;
    }
  };
  place(place, 0);
  return count;
}

std::map<IntersectionProfile, std::uint64_t> enumerate_compatible_by_profile(
    const Graph& pattern, std::span<const Vertex> sigma0, Vertex n) {
  const Vertex k = pattern.vertex_count();
  require(k <= 7, "enumerate_compatible_by_profile: pattern too large (k <= 7)");
  require(n <= 12, "enumerate_compatible_by_profile: instance too large (n <= 12)");
  require(sigma0.size() == k, "enumerate_compatible_by_profile: sigma0 size mismatch");
  require(k <= n, "enumerate_compatible_by_profile: pattern larger than host");

  // Image graph of sigma0: which host pairs are its vertices/edges.
  std::vector<std::int64_t> sigma0_index(n, -1);
  for (Vertex i = 0; i < k; ++i) {
    require(sigma0[i] < n, "enumerate_compatible_by_profile: sigma0 out of range");
    require(sigma0_index[sigma0[i]] == -1, "enumerate_compatible_by_profile: sigma0 not injective");
    sigma0_index[sigma0[i]] = i;
  }
  const auto in_image0 = [&](Vertex w) { return sigma0_index[w] != -1; };
  const auto image0_edge = [&](Vertex a, Vertex b) {
    return pattern.has_edge(static_cast<Vertex>(sigma0_index[a]),
                            static_cast<Vertex>(sigma0_index[b]));
  };

  std::map<IntersectionProfile, std::uint64_t> profiles;
  std::vector<Vertex> image(k);
  std::vector<std::uint8_t> used(n, 0);

  // Union-find over pattern vertices mapped into the shared set, to count
  // the components of the intersection graph at each leaf.
  std::vector<int> parent(k);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  auto place = [&](auto&& self, Vertex i) -> void {
    if (i == k) {
      std::uint32_t s = 0;
      for (Vertex a = 0; a < k; ++a) {
        parent[a] = static_cast<int>(a);
        if (in_image0(image[a])) ++s;
      }
      // Intersection edges: pattern edges with both images shared.
      for (Vertex a = 0; a < k; ++a) {
        if (!in_image0(image[a])) continue;
        for (Vertex b = a + 1; b < k; ++b) {
          if (!in_image0(image[b]) || !pattern.has_edge(a, b)) continue;
          parent[find(static_cast<int>(a))] = find(static_cast<int>(b));
        }
      }
      std::uint32_t c = 0;
      for (Vertex a = 0; a < k; ++a) {
        if (in_image0(image[a]) && find(static_cast<int>(a)) == static_cast<int>(a)) ++c;
      }
      ++profiles[IntersectionProfile{s, c}];
      return;
    }
    for (Vertex w = 0; w < n; ++w) {
      if (used[w]) continue;
      // Compatibility pruning: any pair with both images shared must agree.
      bool ok = true;
      if (in_image0(w)) {
        for (Vertex j = 0; j < i && ok; ++j) {
          if (in_image0(image[j]) &&
              pattern.has_edge(i, j) != image0_edge(w, image[j])) {
            ok = false;
          }
        }
      }
      if (!ok) continue;
      image[i] = w;
      used[w] = 1;
      self(self, i + 1);
      used[w] = 0;
    }
  };
  place(place, 0);
  return profiles;
}

std::uint64_t count_subtrees_containing(const Graph& h, Vertex v, std::size_t s) {
  const Vertex n = h.vertex_count();
  require(n <= 12, "count_subtrees_containing: instance too large (n <= 12)");
  require(v < n, "count_subtrees_containing: vertex out of range");
  if (s == 0 || s > n) return 0;
  const auto adj = adjacency_masks(h);
  std::uint64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> v & 1)) continue;
    if (static_cast<std::size_t>(std::popcount(mask)) != s) continue;
    if (edges_in_mask(adj, mask) != s - 1) continue;
    if (!connected_in_mask(adj, mask)) continue;
    ++count;
  }
  return count;
}

AdmissibleSearchResult longest_admissible_path_exact(const Digraph& d,
                                                     const ConflictSystem& cs) {
  cs.validate(d);
  const Vertex n = d.vertex_count();
  const Vertex reps = cs.conflict_graph.vertex_count();
  require(n <= 8, "longest_admissible_path_exact: digraph too large (order <= 8)");
  require(reps <= 12, "longest_admissible_path_exact: representative universe too large (<= 12)");

  std::vector<std::uint32_t> conflict_mask(reps, 0);
  for (Vertex y = 0; y < reps; ++y) {
    for (const Vertex w : cs.conflict_graph.neighbors(y)) conflict_mask[y] |= 1u << w;
  }

  AdmissibleSearchResult best;
  std::vector<Vertex> path;
  std::vector<std::uint32_t> chosen;

  auto extend = [&](auto&& self, Vertex tip, std::uint32_t visited,
                    std::uint32_t used_reps) -> void {
    if (path.size() > best.path.size()) {
      best.path = path;
      best.representatives = chosen;
      best.edge_length = path.size() - 1;
    }
    std::size_t eid = d.first_edge_id(tip);
    for (const Vertex v : d.out_neighbors(tip)) {
      if (!(visited >> v & 1)) {
        for (const std::uint32_t y : cs.lambda_of(eid)) {
          if ((used_reps >> y & 1) || (conflict_mask[y] & used_reps)) continue;
          path.push_back(v);
          chosen.push_back(y);
          self(self, v, visited | (1u << v), used_reps | (1u << y));
          path.pop_back();
          chosen.pop_back();
        }
      }
      ++eid;
    }
  };

  for (Vertex v = 0; v < n; ++v) {
    path.assign(1, v);
    chosen.clear();
    extend(extend, v, 1u << v, 0);
  }
  return best;
}

}  // namespace indpath
