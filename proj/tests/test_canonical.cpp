#include <doctest.h>

#include <algorithm>

#include "minpaths/canonical.hpp"
#include "minpaths/enumeration.hpp"
#include "minpaths/error.hpp"
#include "minpaths/generators.hpp"
#include "support/oracles.hpp"

using namespace minpaths;
using oracle::w;

TEST_CASE("two-vertex completion adds heavy reverse edges") {
  // Completion weight n*w = 2*5 = 10; forward weights are already shortest.
  std::vector<ColouredEdgeGraph::EdgeSpec> edges{{0, 1, 0, w("5")}, {0, 1, 1, w("2")}};
  ColouredEdgeGraph g(2, 2, edges);
  CHECK_FALSE(is_canonical(g).complete_per_colour);

  CanonicalGraph result = canonicalize(g);
  const ColouredEdgeGraph& star = result.graph;
  CHECK(result.original_edge_count == 2);
  REQUIRE(star.edge_count() == 4);
  CHECK(star.edge(0).weight == w("5"));
  CHECK(star.edge(1).weight == w("2"));
  for (EdgeId id : {EdgeId{2}, EdgeId{3}}) {
    CHECK(star.edge(id).source == 1);
    CHECK(star.edge(id).target == 0);
    CHECK(star.edge(id).weight == w("10"));
  }
  CHECK(is_canonical(star).canonical());
}

TEST_CASE("single-colour chain: added edge relaxes to the two-hop distance") {
  // v0 -> v1 -> v2 with weights 1, 1; the added v0 -> v2 edge starts at
  // 3 * 1 = 3 and shortest-path reweighting brings it to 1 + 1.
  std::vector<ColouredEdgeGraph::EdgeSpec> edges{{0, 1, 0, w("1")}, {1, 2, 0, w("1")}};
  ColouredEdgeGraph g(3, 1, edges);
  CanonicalGraph result = canonicalize(g);
  auto find = [&](VertexId x, VertexId y) {
    for (const Edge& e : result.graph.edges()) {
      if (e.source == x && e.target == y) return e.weight;
    }
    FAIL("missing edge");
    return Weight{};
  };
  CHECK(find(0, 2) == w("2"));
  CHECK(oracle::colour_shortest(g, 0, 0, 2) == oracle::units("2"));
  // Reverse edges only have heavy routes: 1 -> 0 is direct (3).
  CHECK(find(1, 0) == w("3"));
  CHECK(find(2, 0) == w("3"));
  CHECK(is_canonical(result.graph).canonical());
}

TEST_CASE("canonical graphs are fixed points") {
  ColouredEdgeGraph once = canonicalize(
      gen_random(5, 2, 0.6, WeightDistribution::uniform(0, 1), 4)).graph;
  ColouredEdgeGraph twice = canonicalize(once).graph;
  CHECK(twice == once);
}

TEST_CASE("predicate reports incompleteness and triangle violations") {
  SUBCASE("missing reverse edge") {
    std::vector<ColouredEdgeGraph::EdgeSpec> edges{{0, 1, 0, w("1")}};
    CanonicalReport r = is_canonical(ColouredEdgeGraph(2, 1, edges));
    CHECK_FALSE(r.complete_per_colour);
    CHECK_FALSE(r.canonical());
  }
  SUBCASE("triangle 1 + 1 < 5") {
    std::vector<ColouredEdgeGraph::EdgeSpec> edges;
    for (VertexId a = 0; a < 3; ++a) {
      for (VertexId b = 0; b < 3; ++b) {
        if (a == b) continue;
        Weight weight = (a == 0 && b == 2) ? w("5") : w("1");
        edges.push_back({a, b, 0, weight});
      }
    }
    CanonicalReport r = is_canonical(ColouredEdgeGraph(3, 1, edges));
    CHECK(r.complete_per_colour);
    CHECK(r.triangle_violations == std::vector<TriangleViolation>{{0, 1, 2, 0}});
  }
}

TEST_CASE("canonicalize preconditions") {
  CHECK_THROWS_AS(canonicalize(ColouredEdgeGraph(1, 1, {})), DomainError);
  CHECK_THROWS_AS(canonicalize(ColouredEdgeGraph(3, 1, {})), DomainError);
  std::vector<ColouredEdgeGraph::EdgeSpec> dup{{0, 1, 0, w("1")}, {0, 1, 0, w("2")}};
  CHECK_THROWS_AS(canonicalize(ColouredEdgeGraph(2, 1, dup)), PreconditionError);
  std::vector<ColouredEdgeGraph::EdgeSpec> heavy{
      {0, 1, 0, Weight(std::int64_t{1} << 62)}};
  CHECK_THROWS_AS(canonicalize(ColouredEdgeGraph(3, 1, heavy)), OverflowError);
}

TEST_CASE("completion properties on random graphs") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    unsigned n = 2 + static_cast<unsigned>(seed % 4);
    unsigned k = 1 + static_cast<unsigned>(seed % 3);
    ColouredEdgeGraph g = seed % 2
        ? gen_random(n, k, 0.5, WeightDistribution::uniform(0, 1), seed)
        : oracle::small_integer_graph(n, k, 0.5, 4, seed);
    if (g.edge_count() == 0) continue;
    CanonicalGraph result = canonicalize(g);
    const ColouredEdgeGraph& star = result.graph;

    CHECK(is_canonical(star).canonical());
    CHECK(star.edge_count() == std::size_t{k} * n * (n - 1));
    for (const Edge& e : g.edges()) {
      const Edge& kept = star.edge(e.id);
      CHECK(kept.source == e.source);
      CHECK(kept.target == e.target);
      CHECK(kept.colour == e.colour);
      CHECK(kept.weight <= e.weight);
    }
    // Each edge is its own single-colour shortest route and a minimal path.
    for (const Edge& e : star.edges()) {
      CHECK(oracle::colour_shortest(star, e.colour, e.source, e.target) ==
            e.weight.units());
    }
    for (const Edge& e : star.edges()) {
      ParetoFrontier f = enumerate_oracle(star, e.source, e.target,
                                          FrontierMode::all_minimal);
      bool found = false;
      for (const auto& entry : f.entries) {
        for (const Path& p : entry.witnesses) {
          found = found || p.edges == std::vector<EdgeId>{e.id};
        }
      }
      CHECK(found);
    }
  }
}
