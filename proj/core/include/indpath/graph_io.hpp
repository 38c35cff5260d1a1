#pragma once

#include <iosfwd>

#include "indpath/graph.hpp"

namespace indpath {

// Edge-list text format: first line "n m", then m lines "u v" with u < v,
// 0-indexed, newline-terminated. The reader rejects self-loops, duplicate
// edges, out-of-range indices and count mismatches.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace indpath
