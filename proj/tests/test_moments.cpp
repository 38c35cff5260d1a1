#include <cmath>

#include "doctest.h"
#include "indpath/gnp.hpp"
#include "indpath/moments.hpp"
#include "indpath/oracles.hpp"
#include "indpath/rng.hpp"
#include "support/patterns.hpp"

using namespace indpath;
using namespace indpath::testing;

namespace {

ForestShape p3_shape() { return ForestShape::from_graph(make_path(3)); }

}  // namespace

TEST_CASE("ForestShape::from_graph") {
  const ForestShape p3 = p3_shape();
  CHECK(p3.order == 3);
  CHECK(p3.edges == 2);
  CHECK(p3.components == 1);
  CHECK(p3.max_degree == 2);
  CHECK_THROWS(ForestShape::from_graph(make_cycle(4)));
}

TEST_CASE("expected_labelled_copies") {
  const ForestShape single{1, 0, 1, 0};
  CHECK(expected_labelled_copies(9, 0.4, single) == doctest::Approx(9.0).epsilon(1e-12));

  const ForestShape k2 = ForestShape::from_graph(make_path(2));
  CHECK(expected_labelled_copies(10, 0.5, k2) == doctest::Approx(45.0).epsilon(1e-12));

  CHECK(expected_labelled_copies(8, 0.3, p3_shape()) ==
        doctest::Approx(21.168).epsilon(1e-12));

  CHECK(expected_labelled_copies(5, 0.0, k2) == 0.0);
  CHECK(expected_labelled_copies(5, 0.0, single) == doctest::Approx(5.0));
  CHECK_THROWS(expected_labelled_copies(2, 0.3, p3_shape()));  // k > n
  CHECK_THROWS(expected_labelled_copies(8, 1.0, p3_shape()));
}

TEST_CASE("conditional_copy_prob endpoints are exact") {
  const ForestShape shape = p3_shape();
  // Full overlap: conditioning absorbs everything.
  CHECK(conditional_copy_prob(0.3, shape, {3, 1}) == 1.0);
  // No overlap: the unconditional probability, exactly.
  const double unconditional = std::pow(0.3, 2) * std::pow(0.7, 1);
  CHECK(conditional_copy_prob(0.3, shape, {0, 0}) ==
        doctest::Approx(unconditional).epsilon(1e-14));
  // The fixture used by the conditional Monte Carlo cross-check.
  CHECK(conditional_copy_prob(0.3, shape, {2, 1}) == doctest::Approx(0.21).epsilon(1e-14));
}

TEST_CASE("conditional_copy_prob rejects infeasible profiles") {
  // An edgeless shape cannot support a connected overlap of two vertices:
  // the p-exponent e - s + c goes negative.
  const ForestShape two_singletons{2, 0, 2, 0};
  CHECK_THROWS(log_conditional_copy_prob(0.3, two_singletons, {2, 1}));
  CHECK_THROWS(log_conditional_copy_prob(0.3, p3_shape(), {4, 1}));
  CHECK_THROWS(log_conditional_copy_prob(0.3, p3_shape(), {2, 0}));
}

TEST_CASE("compatible_count_bound") {
  CHECK(compatible_count_bound(3, 3, 1, 2, 10) == doctest::Approx(124416.0).epsilon(1e-9));
  CHECK(compatible_count_bound(2, 2, 1, 1, 5) == doctest::Approx(144.0).epsilon(1e-9));
  // (s, c) = (0, 0): plain falling factorial (n-k)_k.
  CHECK(compatible_count_bound(3, 0, 0, 2, 10) ==
        doctest::Approx(7.0 * 6.0 * 5.0).epsilon(1e-9));
  CHECK_THROWS(compatible_count_bound(3, 4, 1, 2, 10));
  CHECK_THROWS(compatible_count_bound(3, 2, 3, 2, 10));
}

TEST_CASE("subtree_count_bound") {
  CHECK(subtree_count_bound(3, 1) == 1.0);
  CHECK(subtree_count_bound(2, 3) ==
        doctest::Approx(4.0 * std::numbers::e * std::numbers::e).epsilon(1e-12));
  CHECK(subtree_count_bound(3, 4) ==
        doctest::Approx(27.0 * std::exp(3.0)).epsilon(1e-12));
  CHECK_THROWS(subtree_count_bound(2, 0));
}

TEST_CASE("induced_copy_prob_lower_log") {
  // Delta = 0: only the additive tail term remains.
  const double d = 50.0, eps = 0.5;
  CHECK(induced_copy_prob_lower_log(1000, d, 0.0, eps) ==
        doctest::Approx(-2.0 * std::pow(d, -eps / 7.0)).epsilon(1e-12));

  const double value = induced_copy_prob_lower_log(1e6, 1e3, 2.0, 0.5);
  CHECK(value == doctest::Approx(-1.9088e6).epsilon(1e-3));

  // Increasing d at fixed n strictly increases the bound.
  double previous = induced_copy_prob_lower_log(1e5, 10.0, 2.0, 0.5);
  for (const double dd : {30.0, 100.0, 300.0, 1000.0, 3000.0}) {
    const double current = induced_copy_prob_lower_log(1e5, dd, 2.0, 0.5);
    CHECK(current > previous);
    previous = current;
  }

  CHECK(induced_copy_degree_ok(1000.0, 2.0, 0.9));
  CHECK_FALSE(induced_copy_degree_ok(10.0, 50.0, 0.1));
}

TEST_CASE("tmatching_first_moment_log") {
  CHECK(tmatching_first_moment_log(10, 0.3, 2, 0) == 0.0);
  CHECK(tmatching_first_moment_log(50, 0.2, 2, 1) ==
        doctest::Approx(std::log(50.0 * 50.0 * 0.2)).epsilon(1e-12));
  CHECK(tmatching_first_moment_log(100, 0.1, 2, 2) ==
        doctest::Approx(std::log(328050.0)).epsilon(1e-12));
  CHECK_THROWS(tmatching_first_moment_log(5, 0.1, 3, 2));  // r L > n
}

TEST_CASE("talagrand_tail") {
  CHECK(talagrand_tail({10, 0, 1, 1}).tail == 1.0);
  CHECK(talagrand_tail({10, 2, 1, 1}).tail == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  const auto t = talagrand_tail({100, 1, 2, 2});
  CHECK(t.threshold == doctest::Approx(100.0 - 2.0 * std::sqrt(102.0)).epsilon(1e-12));
  CHECK_THROWS(talagrand_tail({-1, 0, 1, 1}));
}

TEST_CASE("connection stats alpha") {
  const ConnectionStats stats{2, 0.1, 10, 3};
  CHECK(stats.alpha() ==
        doctest::Approx(4.0 * 0.01 * std::pow(0.9, 11)).epsilon(1e-12));
  const ConnectionStats no_exponent{5, 0.2, 2, 0};
  CHECK(no_exponent.alpha() == doctest::Approx(25.0 * 0.04).epsilon(1e-12));

  const auto report = connection_feasibility_report(1000.0, 16.0, 0.25, stats, 20.0);
  CHECK(report.alpha == doctest::Approx(stats.alpha()));
  CHECK(report.union_bound_log ==
        doctest::Approx(2.0 * 20.0 * std::numbers::ln2 + 4.0 * 20.0 * std::log(16.0)));
  CHECK(report.per_triple_failure_log ==
        doctest::Approx(-std::pow(0.25 * 20.0 / 8.0, 2) * stats.alpha() * 250.0));
  CHECK(report.margin ==
        doctest::Approx(report.union_bound_log + report.per_triple_failure_log));
}

TEST_CASE("log-space agrees with direct space where direct space is finite") {
  CounterRng rng(2424);
  for (int trial = 0; trial < 200; ++trial) {
    const auto k = static_cast<std::uint32_t>(2 + rng.next_below(6));
    const auto comps = static_cast<std::uint32_t>(1 + rng.next_below(k));
    const ForestShape shape{k, k - comps, comps, k > comps ? 2u : 0u};
    const auto n = static_cast<std::uint64_t>(k + rng.next_below(20));
    const double p = 0.05 + 0.15 * static_cast<double>(rng.next_below(6));

    // Direct product evaluation, an independent route.
    double direct = 1.0;
    for (std::uint32_t i = 0; i < k; ++i) direct *= static_cast<double>(n - i);
    for (std::uint32_t i = 0; i < shape.edges; ++i) direct *= p;
    const auto pairs = static_cast<std::uint32_t>(k * (k - 1) / 2);
    for (std::uint32_t i = 0; i < pairs - shape.edges; ++i) direct *= 1.0 - p;

    const double via_log = expected_labelled_copies(n, p, shape);
    REQUIRE(std::abs(via_log - direct) <= 1e-9 * std::abs(direct));
  }
}

TEST_CASE("bound domination smoke grids") {
  // Small-scale version of the exhaustive acceptance grids.
  SUBCASE("compatible placements vs. their bound") {
    for (const auto& tree : all_trees(5, 3)) {
      const Vertex k = tree.vertex_count();
      std::vector<Vertex> identity(k);
      for (Vertex i = 0; i < k; ++i) identity[i] = i;
      const Vertex n = 9;
      const auto profiles = enumerate_compatible_by_profile(tree, identity, n);
      for (const auto& [profile, count] : profiles) {
        const double bound =
            compatible_count_bound(k, profile.s, profile.c, tree.max_degree(), n);
        REQUIRE(static_cast<double>(count) <= bound * (1.0 + 1e-9));
      }
    }
  }
  SUBCASE("subtree counts vs. their bound") {
    CounterRng rng(555);
    for (int trial = 0; trial < 30; ++trial) {
      const Graph g = sample_gnp({7, 0.35}, rng.next_u64());
      if (g.max_degree() > 3) continue;
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (std::size_t s = 1; s <= g.vertex_count(); ++s) {
          const auto count = count_subtrees_containing(g, v, s);
          REQUIRE(static_cast<double>(count) <=
                  subtree_count_bound(g.max_degree(), static_cast<std::uint32_t>(s)) *
                      (1.0 + 1e-9));
        }
      }
    }
  }
}

TEST_CASE("empirical T-matching frequency respects the first-moment bound") {
  // Smoke version (the acceptance suite runs 1e4 samples): the bound value
  // exceeds 1 at these parameters, so the check is structural.
  const Graph k2 = make_path(2);
  for (const std::uint32_t r : {2u, 3u}) {
    const double bound = std::exp(tmatching_first_moment_log(10, 0.3, 2, r));
    int hits = 0;
    const int trials = 2000;
    for (int t = 0; t < trials; ++t) {
      const Graph g = sample_gnp({10, 0.3}, CounterRng::derive(808 + r, t));
      if (max_induced_tmatching_exact(g, k2) >= 2 * r) ++hits;
    }
    const double freq = static_cast<double>(hits) / trials;
    const double se = std::sqrt(freq * (1.0 - freq) / trials);
    CHECK(freq <= bound + 3.0 * se);
  }
}
