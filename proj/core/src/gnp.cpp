#include "indpath/gnp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "indpath/portable_math.hpp"
#include "indpath/rng.hpp"

namespace indpath {

namespace {

// Below this edge probability the sampler switches to geometric skipping.
constexpr double kSparseThreshold = 0.01;

}  // namespace

double GnpParams::q() const {
  if (p >= 1.0) throw std::domain_error("GnpParams::q undefined at p = 1");
  return 1.0 / (1.0 - p);
}

void GnpParams::validate() const {
  if (!(p >= 0.0) || !(p <= 1.0)) {
    throw std::invalid_argument("GnpParams: p must lie in [0, 1]");
  }
}

Graph sample_gnp(const GnpParams& params, std::uint64_t seed) {
  params.validate();
  const Vertex n = params.n;
  const double p = params.p;
  const std::uint64_t total_pairs =
      static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;

  std::vector<std::pair<Vertex, Vertex>> edges;
  CounterRng rng(seed);

  if (p >= 1.0) {
    edges.reserve(total_pairs);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
  } else if (p > 0.0 && p < kSparseThreshold) {
    // Geometric skipping: the gap to the next edge is
    // floor(log(U)/log(1-p)) with U uniform on (0,1]. Both logarithms are
    // portable, so the edge set depends only on (params, seed).
    const double log_q = portable_log1p(-p);  // < 0
    edges.reserve(static_cast<std::size_t>(p * static_cast<double>(total_pairs) * 1.1) + 16);
    std::uint64_t idx = 0;
    Vertex row = 0;
    std::uint64_t row_start = 0;  // linear index of pair (row, row+1)
    while (idx < total_pairs) {
      const double skip_d = std::floor(portable_log(rng.next_unit()) / log_q);
      if (skip_d >= static_cast<double>(total_pairs - idx)) break;
      idx += static_cast<std::uint64_t>(skip_d);
      if (idx >= total_pairs) break;
      while (idx >= row_start + (n - 1 - row)) {
        row_start += n - 1 - row;
        ++row;
      }
      const Vertex col = static_cast<Vertex>(row + 1 + (idx - row_start));
      edges.emplace_back(row, col);
      ++idx;
    }
  } else if (p > 0.0) {
    const std::uint64_t threshold = CounterRng::bernoulli_threshold(p);
    edges.reserve(static_cast<std::size_t>(p * static_cast<double>(total_pairs) * 1.1) + 16);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (rng.next_bernoulli(threshold)) edges.emplace_back(u, v);
      }
    }
  }
  return Graph::from_edges(n, edges);
}

VertexSplit split_vertices(Vertex n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("split_vertices: n must be >= 2");
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  CounterRng rng(seed);
  for (Vertex i = n - 1; i > 0; --i) {
    const auto j = static_cast<Vertex>(rng.next_below(i + 1));
    std::swap(perm[i], perm[j]);
  }
  const std::size_t half = (static_cast<std::size_t>(n) + 1) / 2;
  VertexSplit split;
  split.part_one.assign(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(half));
  split.part_two.assign(perm.begin() + static_cast<std::ptrdiff_t>(half), perm.end());
  std::sort(split.part_one.begin(), split.part_one.end());
  std::sort(split.part_two.begin(), split.part_two.end());
  return split;
}

}  // namespace indpath
