#include <doctest.h>

#include "minpaths/bounds.hpp"
#include "minpaths/error.hpp"
#include "minpaths/generators.hpp"
#include "support/oracles.hpp"

using namespace minpaths;

namespace {

template <typename A, typename B>
bool same(const A& a, const B& b) {
  return a.str() == b.str();
}

}  // namespace

TEST_CASE("bound values for the worked examples") {
  CHECK(compute_bounds(3, 2).simple_path_max == 6);
  CHECK(compute_bounds(4, 2).simple_path_max == 26);
  CHECK(compute_bounds(4, 2).incomparable_max == 8);
  CHECK(compute_bounds(4, 3).total_minimal_max == 48);
  CHECK(compute_bounds(4, 2).edge_max == 24);
  REQUIRE(compute_bounds(4, 2).red_edge_max.has_value());
  CHECK(*compute_bounds(4, 2).red_edge_max == 7);
  CHECK(*compute_bounds(2, 2).red_edge_max == 1);
  CHECK_FALSE(compute_bounds(4, 3).red_edge_max.has_value());
}

TEST_CASE("bounds agree with independent evaluation") {
  for (unsigned n = 2; n <= 8; ++n) {
    for (unsigned k = 1; k <= 4; ++k) {
      BoundSet b = compute_bounds(n, k);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(same(b.simple_path_max, oracle::complete_graph_simple_paths(n, k)));
      CHECK(same(b.incomparable_max, oracle::pow_big(k, n - 1)));
      CHECK(same(b.total_minimal_max, oracle::BigInt(k) * oracle::pow_big(k + 1, n - 2)));
      CHECK(same(b.edge_max, oracle::BigInt(k * n * (n - 1))));
      CHECK(b.incomparable_max <= b.total_minimal_max);
      CHECK(b.total_minimal_max <= b.simple_path_max);
      CHECK(b.incomparable_max > 0);
    }
  }
}

TEST_CASE("bounds domain and overflow") {
  CHECK_THROWS_AS(compute_bounds(1, 2), DomainError);
  CHECK_THROWS_AS(compute_bounds(3, 0), DomainError);
  CHECK_NOTHROW(compute_bounds(100, 2));
  CHECK_THROWS_AS(compute_bounds(200, 2), OverflowError);
  CHECK_NOTHROW(compute_bounds(5, 1u << 30));
  CHECK_THROWS_AS(compute_bounds(40, 1u << 30), OverflowError);
}

TEST_CASE("edge bound is reached by full random graphs") {
  for (unsigned n = 2; n <= 6; ++n) {
    for (unsigned k = 1; k <= 3; ++k) {
      ColouredEdgeGraph g = gen_random(n, k, 1.0, WeightDistribution::uniform(0, 1), n * k);
      CHECK(compute_bounds(n, k).edge_max == g.edge_count());
    }
  }
}

TEST_CASE("compliance report") {
  SUBCASE("doubling chain is tight for the incomparable bound") {
    ChainSpec spec;
    spec.n = 4;
    spec.k = 2;
    ComplianceReport r = check_instance(gen_chain(spec), 0, 3);
    CHECK(r.observed.distinct_weights == 8);
    CHECK(r.incomparable_tight());
    CHECK_FALSE(r.violated());
  }
  SUBCASE("three-colour example is tight for the total bound") {
    ComplianceReport r = check_instance(gen_theorem2_tight(4), 0, 3);
    CHECK(r.observed.total_minimal_paths == 48);
    CHECK(r.total_tight());
    CHECK_FALSE(r.violated());
  }
  SUBCASE("random instance") {
    ComplianceReport r = check_instance(
        gen_random(5, 2, 1.0, WeightDistribution::uniform(0, 1), 77), 0, 4);
    CHECK(r.observed.distinct_weights <= 16);
    CHECK_FALSE(r.violated());
  }
  SUBCASE("parallel same-colour edges: total bound reported, not asserted") {
    const FixedScale scale;
    std::vector<ColouredEdgeGraph::EdgeSpec> edges{
        {0, 1, 0, scale.whole(1)}, {0, 1, 0, scale.whole(1)}, {0, 1, 0, scale.whole(1)}};
    ComplianceReport r = check_instance(ColouredEdgeGraph(2, 1, edges), 0, 1);
    CHECK_FALSE(r.single_edge_per_colour);
    CHECK(r.observed.total_minimal_paths == 3);
    CHECK_FALSE(r.total_ok());
    CHECK_FALSE(r.violated());
  }
}
