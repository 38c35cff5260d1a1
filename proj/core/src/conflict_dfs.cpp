#include "indpath/conflict_dfs.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace indpath {

Digraph Digraph::from_edges(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges) {
  Digraph d;
  d.n_ = n;
  d.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("digraph: endpoint out of range");
    if (u == v) throw std::invalid_argument("digraph: self-loop");
    ++d.offsets_[u + 1];
  }
  for (Vertex v = 0; v < n; ++v) d.offsets_[v + 1] += d.offsets_[v];
  d.targets_.resize(d.offsets_[n]);
  std::vector<std::size_t> cursor(d.offsets_.begin(), d.offsets_.end() - 1);
  for (const auto& [u, v] : edges) d.targets_[cursor[u]++] = v;
  for (Vertex v = 0; v < n; ++v) {
    std::sort(d.targets_.begin() + static_cast<std::ptrdiff_t>(d.offsets_[v]),
              d.targets_.begin() + static_cast<std::ptrdiff_t>(d.offsets_[v + 1]));
  }
  d.validate();
  return d;
}

std::optional<std::size_t> Digraph::edge_id(Vertex u, Vertex v) const {
  const auto out = out_neighbors(u);
  const auto it = std::lower_bound(out.begin(), out.end(), v);
  if (it == out.end() || *it != v) return std::nullopt;
  return offsets_[u] + static_cast<std::size_t>(it - out.begin());
}

void Digraph::validate() const {
  if (offsets_.size() != static_cast<std::size_t>(n_) + 1 || offsets_[0] != 0 ||
      offsets_[n_] != targets_.size()) {
    throw std::invalid_argument("digraph: malformed CSR offsets");
  }
  for (Vertex v = 0; v < n_; ++v) {
    const auto out = out_neighbors(v);
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i] >= n_) throw std::invalid_argument("digraph: target out of range");
      if (out[i] == v) throw std::invalid_argument("digraph: self-loop");
      if (i > 0 && out[i - 1] >= out[i]) {
        throw std::invalid_argument("digraph: out-list not strictly increasing");
      }
    }
  }
}

void ConflictSystem::validate(const Digraph& d) const {
  if (lambda.size() != d.edge_count()) {
    throw std::invalid_argument("conflict system: assignment must cover every edge");
  }
  const Vertex reps = conflict_graph.vertex_count();
  for (const auto& set : lambda) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i] >= reps) throw std::invalid_argument("conflict system: representative id out of range");
      if (i > 0 && set[i - 1] >= set[i]) {
        throw std::invalid_argument("conflict system: representative set not strictly increasing");
      }
    }
  }
}

bool validate_admissible_path(const Digraph& d, const ConflictSystem& cs,
                              const AdmissiblePath& path) {
  const auto& vs = path.vertices;
  if (vs.empty()) return path.representatives.empty();
  if (path.representatives.size() + 1 != vs.size()) return false;
  std::vector<std::uint8_t> seen_vertex(d.vertex_count(), 0);
  for (const Vertex v : vs) {
    if (v >= d.vertex_count()) return false;
    if (seen_vertex[v]) return false;
    seen_vertex[v] = 1;
  }
  std::vector<std::uint8_t> seen_rep(cs.conflict_graph.vertex_count(), 0);
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    const auto eid = d.edge_id(vs[i], vs[i + 1]);
    if (!eid) return false;
    const std::uint32_t rep = path.representatives[i];
    const auto lam = cs.lambda_of(*eid);
    if (!std::binary_search(lam.begin(), lam.end(), rep)) return false;
    if (seen_rep[rep]) return false;  // distinct
    seen_rep[rep] = 1;
  }
  return is_independent_set(cs.conflict_graph, path.representatives);
}

DfsState make_dfs_state(const Digraph& d, const ConflictSystem& cs) {
  cs.validate(d);
  DfsState state;
  state.location.assign(d.vertex_count(), DfsState::Location::unvisited);
  state.chosen.assign(cs.conflict_graph.vertex_count(), 0);
  state.conflict_pressure.assign(cs.conflict_graph.vertex_count(), 0);
  state.unvisited_count = d.vertex_count();
  return state;
}

namespace {

void choose_representative(DfsState& state, const ConflictSystem& cs, std::uint32_t rep) {
  state.chosen[rep] = 1;
  state.chosen_order.push_back(rep);
  for (const Vertex w : cs.conflict_graph.neighbors(rep)) ++state.conflict_pressure[w];
}

bool rep_eligible(const DfsState& state, std::uint32_t rep) {
  return !state.chosen[rep] && state.conflict_pressure[rep] == 0;
}

void push_unvisited(DfsState& state) {
  while (state.location[state.next_unvisited_hint] != DfsState::Location::unvisited) {
    ++state.next_unvisited_hint;
  }
  const Vertex v = state.next_unvisited_hint;
  state.location[v] = DfsState::Location::on_stack;
  state.stack.push_back(v);
  --state.unvisited_count;
}

}  // namespace

void dfs_step(DfsState& state, const Digraph& d, const ConflictSystem& cs) {
  if (state.terminated()) throw std::logic_error("dfs_step: search already terminated");

  if (state.stack.empty()) {
    push_unvisited(state);
    return;
  }

  const Vertex u = state.stack.back();
  std::size_t eid = d.first_edge_id(u);
  for (const Vertex v : d.out_neighbors(u)) {
    if (state.location[v] == DfsState::Location::unvisited) {
      for (const std::uint32_t rep : cs.lambda_of(eid)) {
        if (rep_eligible(state, rep)) {
          state.location[v] = DfsState::Location::on_stack;
          state.stack.push_back(v);
          state.stack_reps.push_back(rep);
          --state.unvisited_count;
          choose_representative(state, cs, rep);
          return;
        }
      }
    }
    ++eid;
  }

  state.location[u] = DfsState::Location::explored;
  state.stack.pop_back();
  if (!state.stack_reps.empty()) state.stack_reps.pop_back();
  ++state.explored_count;
}

AdmissiblePath find_admissible_path(const Digraph& d, const ConflictSystem& cs) {
  DfsState state = make_dfs_state(d, cs);

  // Persistent cursors: a (v, y) pair that was skipped is skipped for good
  // (v never returns to T; a representative in X or in conflict with X stays
  // so), hence skipping from cursors picks the same first eligible pair as a
  // rescan from the start would.
  std::vector<std::size_t> out_cursor(d.vertex_count(), 0);
  std::vector<std::size_t> rep_cursor(d.edge_count(), 0);

  AdmissiblePath best;
  const auto snapshot = [&]() {
    if (state.stack.size() > best.vertices.size()) {
      best.vertices = state.stack;
      best.representatives = state.stack_reps;
    }
  };

  while (!state.terminated()) {
    if (state.stack.empty()) {
      push_unvisited(state);
      snapshot();
      continue;
    }
    const Vertex u = state.stack.back();
    const auto out = d.out_neighbors(u);
    bool advanced = false;
    while (out_cursor[u] < out.size()) {
      const Vertex v = out[out_cursor[u]];
      if (state.location[v] != DfsState::Location::unvisited) {
        ++out_cursor[u];
        continue;
      }
      const std::size_t eid = d.first_edge_id(u) + out_cursor[u];
      const auto lam = cs.lambda_of(eid);
      bool pushed = false;
      while (rep_cursor[eid] < lam.size()) {
        const std::uint32_t rep = lam[rep_cursor[eid]];
        if (!rep_eligible(state, rep)) {
          ++rep_cursor[eid];
          continue;
        }
        ++rep_cursor[eid];
        state.location[v] = DfsState::Location::on_stack;
        state.stack.push_back(v);
        state.stack_reps.push_back(rep);
        --state.unvisited_count;
        choose_representative(state, cs, rep);
        pushed = true;
        break;
      }
      if (pushed) {
        advanced = true;
        snapshot();
        break;
      }
      ++out_cursor[u];  // representative set exhausted for this edge
    }
    if (!advanced) {
      state.location[u] = DfsState::Location::explored;
      state.stack.pop_back();
      if (!state.stack_reps.empty()) state.stack_reps.pop_back();
      ++state.explored_count;
    }
  }
  return best;
}

bool check_expansion_hypothesis(const Digraph& d, const ConflictSystem& cs, int k,
                                int x_cap) {
  cs.validate(d);
  const int n = static_cast<int>(d.vertex_count());
  const int reps = static_cast<int>(cs.conflict_graph.vertex_count());
  if (n > 8 || reps > 12) {
    throw std::invalid_argument("check_expansion_hypothesis: instance too large");
  }
  if (k < 1) throw std::invalid_argument("check_expansion_hypothesis: k must be >= 1");
  if (x_cap > n - 1) {
    throw std::invalid_argument("check_expansion_hypothesis: x_cap exceeds order - 1");
  }
  const int cap = std::min(x_cap, reps);

  std::vector<std::uint32_t> conflict_mask(reps, 0);
  for (int y = 0; y < reps; ++y) {
    for (const Vertex w : cs.conflict_graph.neighbors(static_cast<Vertex>(y))) {
      conflict_mask[y] |= 1u << w;
    }
  }

  // For each ordered disjoint (S, T), the union of candidate representative
  // sets over edges from S to T.
  for (std::uint32_t s_mask = 0; s_mask < (1u << n); ++s_mask) {
    if (std::popcount(s_mask) != k) continue;
    for (std::uint32_t t_mask = 0; t_mask < (1u << n); ++t_mask) {
      if (std::popcount(t_mask) != k || (s_mask & t_mask)) continue;
      std::uint32_t rep_pool = 0;
      for (int u = 0; u < n; ++u) {
        if (!(s_mask >> u & 1)) continue;
        std::size_t eid = d.first_edge_id(static_cast<Vertex>(u));
        for (const Vertex v : d.out_neighbors(static_cast<Vertex>(u))) {
          if (t_mask >> v & 1) {
            for (const std::uint32_t rep : cs.lambda_of(eid)) rep_pool |= 1u << rep;
          }
          ++eid;
        }
      }
      const std::uint32_t x_limit = reps > 0 ? (1u << reps) : 1u;
      for (std::uint32_t x_mask = 0; x_mask < x_limit; ++x_mask) {
        if (std::popcount(x_mask) > cap) continue;
        bool witnessed = false;
        std::uint32_t pool = rep_pool & ~x_mask;
        while (pool) {
          const int y = std::countr_zero(pool);
          pool &= pool - 1;
          if ((conflict_mask[y] & x_mask) == 0) {
            witnessed = true;
            break;
          }
        }
        if (!witnessed) return false;
      }
    }
  }
  return true;
}

void write_conflict_instance(std::ostream& out, const Digraph& d, const ConflictSystem& cs) {
  cs.validate(d);
  out << d.vertex_count() << ' ' << d.edge_count() << ' '
      << cs.conflict_graph.vertex_count() << '\n';
  for (Vertex u = 0; u < d.vertex_count(); ++u) {
    std::size_t eid = d.first_edge_id(u);
    for (const Vertex v : d.out_neighbors(u)) {
      out << u << ' ' << v;
      for (const std::uint32_t rep : cs.lambda_of(eid)) out << ' ' << rep;
      out << '\n';
      ++eid;
    }
  }
  const Graph& c = cs.conflict_graph;
  for (Vertex a = 0; a < c.vertex_count(); ++a) {
    for (const Vertex b : c.neighbors(a)) {
      if (a < b) out << a << ' ' << b << '\n';
    }
  }
}

std::pair<Digraph, ConflictSystem> read_conflict_instance(std::istream& in) {
  std::uint64_t n = 0, m = 0, r = 0;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("conflict instance: empty input");
  {
    std::istringstream header(line);
    if (!(header >> n >> m >> r)) throw std::runtime_error("conflict instance: bad 'N M R' header");
  }
  std::map<std::pair<Vertex, Vertex>, std::vector<std::uint32_t>> assignment;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!std::getline(in, line)) throw std::runtime_error("conflict instance: truncated edges");
    std::istringstream row(line);
    std::uint64_t u = 0, v = 0;
    if (!(row >> u >> v)) throw std::runtime_error("conflict instance: malformed edge line");
    if (u >= n || v >= n) throw std::runtime_error("conflict instance: edge endpoint out of range");
    std::vector<std::uint32_t> reps;
    std::uint64_t rep = 0;
    while (row >> rep) {
      if (rep >= r) throw std::runtime_error("conflict instance: representative out of range");
      reps.push_back(static_cast<std::uint32_t>(rep));
    }
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    const auto key = std::make_pair(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!assignment.emplace(key, std::move(reps)).second) {
      throw std::runtime_error("conflict instance: duplicate digraph edge");
    }
    edges.push_back(key);
  }
  std::vector<std::pair<Vertex, Vertex>> conflict_edges;
  std::uint64_t a = 0, b = 0;
  while (in >> a >> b) {
    if (a >= r || b >= r) throw std::runtime_error("conflict instance: conflict edge out of range");
    conflict_edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  Digraph d = Digraph::from_edges(static_cast<Vertex>(n), edges);
  ConflictSystem cs;
  cs.conflict_graph = Graph::from_edges(static_cast<Vertex>(r), conflict_edges);
  cs.lambda.resize(d.edge_count());
  for (Vertex u = 0; u < d.vertex_count(); ++u) {
    std::size_t eid = d.first_edge_id(u);
    for (const Vertex v : d.out_neighbors(u)) {
      cs.lambda[eid] = assignment.at({u, v});
      ++eid;
    }
  }
  cs.validate(d);
  return {std::move(d), std::move(cs)};
}

}  // namespace indpath
