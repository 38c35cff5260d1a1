#include "indpath/forest.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "indpath/portable_math.hpp"
#include "indpath/rng.hpp"

namespace indpath {

std::vector<Vertex> segment(const std::vector<Vertex>& component, SegmentEnd end,
                            std::size_t m) {
  if (2 * m >= component.size()) {
    throw std::invalid_argument("segment: need 2m < component order");
  }
  if (end == SegmentEnd::head) {
    return {component.begin(), component.begin() + static_cast<std::ptrdiff_t>(m)};
  }
  return {component.end() - static_cast<std::ptrdiff_t>(m), component.end()};
}

LinearForest build_induced_linear_forest(const Graph& g, std::span<const Vertex> allowed,
                                         std::uint32_t component_order, int max_rounds,
                                         std::uint64_t seed) {
  if (component_order < 2) {
    throw std::invalid_argument("build_induced_linear_forest: component order must be >= 2");
  }
  const Vertex n = g.vertex_count();
  std::vector<std::uint8_t> allowed_mask(n, 0);
  for (const Vertex v : allowed) {
    if (v >= n) throw std::invalid_argument("build_induced_linear_forest: vertex out of range");
    allowed_mask[v] = 1;
  }

  LinearForest best;

  // Per-round scratch.
  std::vector<std::uint8_t> blocked(n);   // in committed forest or adjacent to it
  std::vector<std::uint8_t> burned(n);    // discarded by a stalled path this round
  std::vector<std::uint8_t> in_path(n);   // on the path currently being grown
  std::vector<std::uint32_t> path_adj(n); // # current-path vertices adjacent
  std::vector<Vertex> candidates;

  for (int round = 0; round < max_rounds; ++round) {
    CounterRng rng(CounterRng::derive(seed, static_cast<std::uint64_t>(round)));
    std::fill(blocked.begin(), blocked.end(), 0);
    std::fill(burned.begin(), burned.end(), 0);
    std::fill(in_path.begin(), in_path.end(), 0);
    std::fill(path_adj.begin(), path_adj.end(), 0);

    std::vector<Vertex> pool(allowed.begin(), allowed.end());
    LinearForest forest;
    std::deque<Vertex> path;

    // An extension vertex is eligible at either end if it is free and its
    // only edge into the current path goes to that end.
    const auto eligible = [&](Vertex w) {
      return allowed_mask[w] && !blocked[w] && !burned[w] && !in_path[w] &&
             path_adj[w] == 1;
    };

    while (!pool.empty()) {
      const std::size_t pick = rng.next_below(pool.size());
      const Vertex start = pool[pick];
      pool[pick] = pool.back();
      pool.pop_back();
      if (blocked[start] || burned[start]) continue;

      path.assign(1, start);
      in_path[start] = 1;
      for (const Vertex w : g.neighbors(start)) ++path_adj[w];

      while (path.size() < component_order) {
        candidates.clear();
        std::size_t tail_count = 0;
        for (const Vertex w : g.neighbors(path.back())) {
          if (eligible(w)) {
            candidates.push_back(w);
            ++tail_count;
          }
        }
        if (path.size() > 1) {
          for (const Vertex w : g.neighbors(path.front())) {
            if (eligible(w)) candidates.push_back(w);
          }
        }
        if (candidates.empty()) break;
        const std::size_t choice = rng.next_below(candidates.size());
        const Vertex next = candidates[choice];
        if (choice < tail_count) {
          path.push_back(next);
        } else {
          path.push_front(next);
        }
        in_path[next] = 1;
        for (const Vertex w : g.neighbors(next)) ++path_adj[w];
      }

      if (path.size() == component_order) {
        for (const Vertex v : path) {
          in_path[v] = 0;
          blocked[v] = 1;
          for (const Vertex w : g.neighbors(v)) {
            --path_adj[w];
            blocked[w] = 1;
          }
        }
        forest.components.emplace_back(path.begin(), path.end());
      } else {
        for (const Vertex v : path) {
          in_path[v] = 0;
          burned[v] = 1;
          for (const Vertex w : g.neighbors(v)) --path_adj[w];
        }
      }
    }

    if (forest.total_order() > best.total_order()) best = std::move(forest);
  }
  return best;
}

bool verify_induced_forest(const Graph& g, const LinearForest& f,
                           std::optional<std::size_t> expected_order) {
  const Vertex n = g.vertex_count();
  std::vector<std::int64_t> comp_of(n, -1);
  std::vector<std::size_t> pos_of(n, 0);
  for (std::size_t c = 0; c < f.components.size(); ++c) {
    const auto& comp = f.components[c];
    if (comp.empty()) return false;
    if (expected_order && comp.size() != *expected_order) return false;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const Vertex v = comp[i];
      if (v >= n) return false;
      if (comp_of[v] != -1) return false;  // disjointness
      comp_of[v] = static_cast<std::int64_t>(c);
      pos_of[v] = i;
    }
    for (std::size_t i = 0; i + 1 < comp.size(); ++i) {
      if (!g.has_edge(comp[i], comp[i + 1])) return false;
    }
  }
  // Induced: every host edge among forest vertices must be a consecutive
  // pair of one component.
  for (const auto& comp : f.components) {
    for (const Vertex v : comp) {
      for (const Vertex w : g.neighbors(v)) {
        if (comp_of[w] == -1) continue;
        if (comp_of[w] != comp_of[v]) return false;
        const auto gap = static_cast<std::int64_t>(pos_of[v]) -
                         static_cast<std::int64_t>(pos_of[w]);
        if (gap != 1 && gap != -1) return false;
      }
    }
  }
  return true;
}

double normalized_forest_order(const LinearForest& f, double n, double p) {
  const double scale = portable_log(n * p) / p;
  return static_cast<double>(f.total_order()) / scale;
}

}  // namespace indpath
