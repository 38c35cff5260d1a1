#pragma once

#include <cstdint>

#include "indpath/graph.hpp"
#include "indpath/intersection_profile.hpp"

namespace indpath {

// All evaluators compute in natural-log space first; the direct-space
// functions are exp() convenience wrappers. Zero exponents short-circuit so
// that p = 0 with exponent 0 contributes factor 1, never 0 * log(0).

// Shape summary of a forest pattern F: order k, edge count, component count
// and maximum degree. For a forest, edges == order - components.
struct ForestShape {
  std::uint32_t order = 0;       // k
  std::uint32_t edges = 0;       // e(F)
  std::uint32_t components = 0;
  std::uint32_t max_degree = 0;  // Delta

  static ForestShape from_graph(const Graph& forest);  // throws if not a forest
  void validate() const;
};

// log (n)_k, the falling factorial. Direct sum of logs for k <= 50,
// log-gamma differences beyond that.
double log_falling_factorial(double n, std::uint64_t k);

// log E[Y] = log[(n)_k p^{e} (1-p)^{C(k,2)-e}] for labelled induced copies
// of a forest with shape `shape`. Requires k <= n and 0 <= p < 1.
double log_expected_labelled_copies(std::uint64_t n, double p, const ForestShape& shape);
double expected_labelled_copies(std::uint64_t n, double p, const ForestShape& shape);

// Conditional probability of one placed copy given another with overlap
// profile (s, c):  p^{e-s+c} (1-p)^{C(k,2)-C(s,2)-e+s-c}.
// Throws if either exponent is negative (infeasible profile for the shape).
double log_conditional_copy_prob(double p, const ForestShape& shape,
                                 const IntersectionProfile& profile);
double conditional_copy_prob(double p, const ForestShape& shape,
                             const IntersectionProfile& profile);

// Upper bound on the number of compatible placements with overlap profile
// (s, c):  C(k,c) k^c (6 Delta^2)^s (n-k)_{k-s}.  Requires 0<=c<=s<=k<=n.
double log_compatible_count_bound(std::uint32_t k, std::uint32_t s, std::uint32_t c,
                                  std::uint32_t delta, std::uint64_t n);
double compatible_count_bound(std::uint32_t k, std::uint32_t s, std::uint32_t c,
                              std::uint32_t delta, std::uint64_t n);

// Upper bound on the number of order-s subtrees through a fixed vertex of a
// max-degree-Delta host: (e Delta)^{s-1}. Requires s >= 1.
double log_subtree_count_bound(std::uint32_t delta, std::uint32_t s);
double subtree_count_bound(std::uint32_t delta, std::uint32_t s);

// log of the lower bound on the probability that G(n, d/n) contains an
// induced copy of a fixed bounded-degree forest:
//   -1e4 Delta^2 n log(d)^2 / d^2 - 2 d^{-eps/7}.
// Requires d >= 1 and 0 < eps < 1.
double induced_copy_prob_lower_log(double n, double d, double delta, double eps);

// The bound's degree condition Delta <= d^{eps/6}; callers may warn when it
// fails, the evaluator itself stays defined.
bool induced_copy_degree_ok(double d, double delta, double eps);

// log of the first-moment bound on induced T-matchings with r components and
// |T| = t_order:  log[(n^{rL}/r!) p^{r(L-1)} (1-p)^{C(rL,2)-r(L-1)}].
// Requires r*t_order <= n.
double tmatching_first_moment_log(std::uint64_t n, double p, std::uint32_t t_order,
                                  std::uint32_t r);

// Concentration threshold/tail pair for an L-Lipschitz, (s+L)-certifiable
// statistic: threshold b - t L sqrt(b + offset), tail exp(-t^2/4).
struct TalagrandParams {
  double target_b = 0.0;
  double deviation_t = 0.0;
  double lipschitz = 0.0;
  double certifiable_offset = 0.0;  // the +L in f(s) = s + L

  void validate() const;  // all nonnegative
};

struct TalagrandTail {
  double threshold = 0.0;
  double tail = 1.0;
};

TalagrandTail talagrand_tail(const TalagrandParams& params);

// Single-connector success probability alpha = m^2 p^2 (1-p)^{|F|-2+|X|}.
struct ConnectionStats {
  std::uint32_t segment_length = 0;  // m
  double p = 0.0;
  std::uint64_t forest_order = 0;  // |F|
  std::uint64_t x_size = 0;        // |X|

  double log_alpha() const;
  double alpha() const;
};

// Numeric feasibility of the connection step's union bound: failure exponent
// per (S, T, X) triple vs. the log-count of triples. margin < 0 means the
// whp argument closes at these parameters.
struct FeasibilityReport {
  double alpha = 0.0;
  double per_triple_failure_log = 0.0;  // -(eps N / 8)^2 alpha (n/4)
  double union_bound_log = 0.0;         // 2 N log 2 + 4 N log d
  double margin = 0.0;                  // union_bound_log + per_triple_failure_log
};

FeasibilityReport connection_feasibility_report(double n, double d, double eps,
                                                const ConnectionStats& stats, double count_n);

}  // namespace indpath
