#pragma once

#include <cstdint>

#include "indpath/graph.hpp"

namespace indpath {

// Parameters of the binomial random graph G(n, p). The expected degree d and
// survival base q are always derived from (n, p), never stored.
struct GnpParams {
  Vertex n = 0;
  double p = 0.0;

  double expected_degree() const { return p * static_cast<double>(n); }  // d = n*p
  double q() const;  // 1/(1-p); throws at p == 1

  void validate() const;  // 0 <= p <= 1
};

// Samples G(n, p) reproducibly: each unordered pair is an edge independently
// with probability round(p*2^53)/2^53. Identical (params, seed) gives a
// bit-identical graph on every platform. For p < 0.01 the sampler skips
// geometrically over the row-major pair enumeration (expected O(p n^2)
// work); otherwise it draws one Bernoulli per pair.
Graph sample_gnp(const GnpParams& params, std::uint64_t seed);

struct VertexSplit {
  std::vector<Vertex> part_one;  // V1, size ceil(n/2), sorted
  std::vector<Vertex> part_two;  // V2, the complement, sorted
};

// Deterministic-per-seed balanced partition of [n]: |V1| = ceil(n/2) via a
// seeded Fisher-Yates shuffle. Requires n >= 2.
VertexSplit split_vertices(Vertex n, std::uint64_t seed);

}  // namespace indpath
