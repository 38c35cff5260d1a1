#include "indpath/graph_io.hpp"

#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>

namespace indpath {

Graph read_edge_list(std::istream& in) {
  std::uint64_t n = 0, m = 0;
  if (!(in >> n >> m)) throw std::runtime_error("edge list: missing 'n m' header");
  if (n > 0xFFFFFFFFull) throw std::runtime_error("edge list: n too large");
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(m);
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::uint64_t i = 0; i < m; ++i) {
    std::uint64_t u = 0, v = 0;
    if (!(in >> u >> v)) throw std::runtime_error("edge list: truncated edge lines");
    if (u >= v) throw std::runtime_error("edge list: edges must satisfy u < v");
    if (v >= n) throw std::runtime_error("edge list: endpoint out of range");
    const auto e = std::make_pair(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen.insert(e).second) throw std::runtime_error("edge list: duplicate edge");
    edges.push_back(e);
  }
  std::uint64_t extra = 0;
  if (in >> extra) throw std::runtime_error("edge list: trailing tokens after m edges");
  return Graph::from_edges(static_cast<Vertex>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (const Vertex v : g.neighbors(u)) {
      if (u < v) out << u << ' ' << v << '\n';
    }
  }
}

}  // namespace indpath
