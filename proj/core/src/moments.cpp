#include "indpath/moments.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace indpath {

namespace {

std::uint64_t choose2(std::uint64_t x) { return x * (x - (x > 0 ? 1 : 0)) / 2; }

// exponent * log(base) with the 0 * log(0) = 0 convention.
double pow_log(double exponent, double base) {
  if (exponent == 0.0) return 0.0;
  if (base <= 0.0) return -std::numeric_limits<double>::infinity();
  return exponent * std::log(base);
}

double log_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

}  // namespace

ForestShape ForestShape::from_graph(const Graph& forest) {
  const Vertex k = forest.vertex_count();
  // Count components with a simple scan.
  std::vector<std::uint8_t> seen(k, 0);
  std::uint32_t components = 0;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < k; ++root) {
    if (seen[root]) continue;
    ++components;
    stack.assign(1, root);
    seen[root] = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (const Vertex w : forest.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  ForestShape shape;
  shape.order = k;
  shape.edges = static_cast<std::uint32_t>(forest.edge_count());
  shape.components = components;
  shape.max_degree = forest.max_degree();
  if (k > 0 && shape.edges != k - components) {
    throw std::invalid_argument("ForestShape: graph contains a cycle");
  }
  return shape;
}

void ForestShape::validate() const {
  if (order == 0) {
    if (edges != 0 || components != 0) throw std::invalid_argument("ForestShape: empty order");
    return;
  }
  if (components < 1 || components > order) {
    throw std::invalid_argument("ForestShape: bad component count");
  }
  if (edges != order - components) {
    throw std::invalid_argument("ForestShape: edges must equal order - components");
  }
  if (order > 1 && max_degree < 1 && edges > 0) {
    throw std::invalid_argument("ForestShape: degree inconsistent with edges");
  }
}

double log_falling_factorial(double n, std::uint64_t k) {
  if (k == 0) return 0.0;
  if (static_cast<double>(k) > n) {
    throw std::invalid_argument("log_falling_factorial: k exceeds n");
  }
  if (k <= 50) {
    double sum = 0.0;
    for (std::uint64_t i = 0; i < k; ++i) sum += std::log(n - static_cast<double>(i));
    return sum;
  }
  return std::lgamma(n + 1.0) - std::lgamma(n - static_cast<double>(k) + 1.0);
}

double log_expected_labelled_copies(std::uint64_t n, double p, const ForestShape& shape) {
  shape.validate();
  if (!(p >= 0.0) || !(p < 1.0)) {
    throw std::invalid_argument("log_expected_labelled_copies: need 0 <= p < 1");
  }
  if (shape.order > n) {
    throw std::invalid_argument("log_expected_labelled_copies: pattern larger than host");
  }
  const double non_edges =
      static_cast<double>(choose2(shape.order)) - static_cast<double>(shape.edges);
  return log_falling_factorial(static_cast<double>(n), shape.order) +
         pow_log(static_cast<double>(shape.edges), p) + non_edges * std::log1p(-p);
}

double expected_labelled_copies(std::uint64_t n, double p, const ForestShape& shape) {
  return std::exp(log_expected_labelled_copies(n, p, shape));
}

double log_conditional_copy_prob(double p, const ForestShape& shape,
                                 const IntersectionProfile& profile) {
  shape.validate();
  if (profile.c > profile.s || profile.s > shape.order) {
    throw std::invalid_argument("log_conditional_copy_prob: malformed profile");
  }
  if (profile.s > 0 && profile.c == 0) {
    throw std::invalid_argument("log_conditional_copy_prob: nonempty overlap needs c >= 1");
  }
  const std::int64_t exp_p = static_cast<std::int64_t>(shape.edges) -
                             static_cast<std::int64_t>(profile.s) +
                             static_cast<std::int64_t>(profile.c);
  const std::int64_t exp_q = static_cast<std::int64_t>(choose2(shape.order)) -
                             static_cast<std::int64_t>(choose2(profile.s)) -
                             static_cast<std::int64_t>(shape.edges) +
                             static_cast<std::int64_t>(profile.s) -
                             static_cast<std::int64_t>(profile.c);
  if (exp_p < 0) {
    throw std::invalid_argument("log_conditional_copy_prob: profile infeasible (p exponent < 0)");
  }
  if (exp_q < 0) {
    throw std::invalid_argument("log_conditional_copy_prob: profile infeasible (q exponent < 0)");
  }
  if (!(p >= 0.0) || !(p < 1.0)) {
    throw std::invalid_argument("log_conditional_copy_prob: need 0 <= p < 1");
  }
  return pow_log(static_cast<double>(exp_p), p) +
         static_cast<double>(exp_q) * std::log1p(-p);
}

double conditional_copy_prob(double p, const ForestShape& shape,
                             const IntersectionProfile& profile) {
  return std::exp(log_conditional_copy_prob(p, shape, profile));
}

double log_compatible_count_bound(std::uint32_t k, std::uint32_t s, std::uint32_t c,
                                  std::uint32_t delta, std::uint64_t n) {
  if (c > s || s > k || k > n) {
    throw std::invalid_argument("log_compatible_count_bound: need 0 <= c <= s <= k <= n");
  }
  const double six_delta_sq = 6.0 * static_cast<double>(delta) * static_cast<double>(delta);
  return log_binomial(k, c) + pow_log(static_cast<double>(c), static_cast<double>(k)) +
         pow_log(static_cast<double>(s), six_delta_sq) +
         log_falling_factorial(static_cast<double>(n - k), k - s);
}

double compatible_count_bound(std::uint32_t k, std::uint32_t s, std::uint32_t c,
                              std::uint32_t delta, std::uint64_t n) {
  return std::exp(log_compatible_count_bound(k, s, c, delta, n));
}

double log_subtree_count_bound(std::uint32_t delta, std::uint32_t s) {
  if (s < 1) throw std::invalid_argument("log_subtree_count_bound: s >= 1 required");
  return pow_log(static_cast<double>(s - 1), std::numbers::e * static_cast<double>(delta));
}

double subtree_count_bound(std::uint32_t delta, std::uint32_t s) {
  return std::exp(log_subtree_count_bound(delta, s));
}

double induced_copy_prob_lower_log(double n, double d, double delta, double eps) {
  if (!(d >= 1.0)) throw std::invalid_argument("induced_copy_prob_lower_log: d >= 1");
  if (!(eps > 0.0) || !(eps < 1.0)) {
    throw std::invalid_argument("induced_copy_prob_lower_log: need 0 < eps < 1");
  }
  const double log_d = std::log(d);
  const double first = 1e4 * delta * delta * n * log_d * log_d / (d * d);
  const double second = 2.0 * std::exp(-(eps / 7.0) * log_d);
  return -first - second;
}

bool induced_copy_degree_ok(double d, double delta, double eps) {
  return delta <= std::pow(d, eps / 6.0);
}

double tmatching_first_moment_log(std::uint64_t n, double p, std::uint32_t t_order,
                                  std::uint32_t r) {
  const std::uint64_t rl = static_cast<std::uint64_t>(r) * t_order;
  if (rl > n) throw std::invalid_argument("tmatching_first_moment_log: r * |T| exceeds n");
  if (r == 0) return 0.0;
  if (!(p >= 0.0) || !(p < 1.0)) {
    throw std::invalid_argument("tmatching_first_moment_log: need 0 <= p < 1");
  }
  const double edges = static_cast<double>(r) * (static_cast<double>(t_order) - 1.0);
  const double non_edges = static_cast<double>(choose2(rl)) - edges;
  return static_cast<double>(rl) * std::log(static_cast<double>(n)) -
         std::lgamma(static_cast<double>(r) + 1.0) + pow_log(edges, p) +
         non_edges * std::log1p(-p);
}

void TalagrandParams::validate() const {
  if (target_b < 0.0 || deviation_t < 0.0 || lipschitz < 0.0 || certifiable_offset < 0.0) {
    throw std::invalid_argument("TalagrandParams: all parameters must be nonnegative");
  }
}

TalagrandTail talagrand_tail(const TalagrandParams& params) {
  params.validate();
  TalagrandTail out;
  out.threshold = params.target_b -
                  params.deviation_t * params.lipschitz *
                      std::sqrt(params.target_b + params.certifiable_offset);
  out.tail = std::exp(-params.deviation_t * params.deviation_t / 4.0);
  return out;
}

double ConnectionStats::log_alpha() const {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw std::invalid_argument("ConnectionStats: need 0 < p < 1");
  }
  const std::int64_t exponent = static_cast<std::int64_t>(forest_order) - 2 +
                                static_cast<std::int64_t>(x_size);
  if (exponent < 0) throw std::invalid_argument("ConnectionStats: |F| - 2 + |X| negative");
  return 2.0 * std::log(static_cast<double>(segment_length)) + 2.0 * std::log(p) +
         static_cast<double>(exponent) * std::log1p(-p);
}

double ConnectionStats::alpha() const { return std::exp(log_alpha()); }

FeasibilityReport connection_feasibility_report(double n, double d, double eps,
                                                const ConnectionStats& stats, double count_n) {
  FeasibilityReport report;
  report.alpha = stats.alpha();
  const double st = eps * count_n / 8.0;
  report.per_triple_failure_log = -(st * st) * report.alpha * (n / 4.0);
  report.union_bound_log = 2.0 * count_n * std::numbers::ln2 + 4.0 * count_n * std::log(d);
  report.margin = report.union_bound_log + report.per_triple_failure_log;
  return report;
}

}  // namespace indpath
