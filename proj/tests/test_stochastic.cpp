#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "minpaths/error.hpp"
#include "minpaths/generators.hpp"
#include "minpaths/stochastic.hpp"
#include "support/oracles.hpp"

using namespace minpaths;
using oracle::units;
using oracle::w;

namespace {

// u=0, x=1, v=2; red ux=1, xv=1, uv=3 and the same in green.
ColouredEdgeGraph three_vertex() {
  std::vector<Weight> weights{w("1"), w("1"), w("3"), w("1"), w("1"), w("3")};
  return gen_intro_example(IntroExample::three_vertex, weights);
}

constexpr EdgeId kRedUV = 2;

// One red edge and one green edge of weight 1, both 0 -> 1.
ColouredEdgeGraph two_vertex(const std::string& red) {
  std::vector<ColouredEdgeGraph::EdgeSpec> edges{{0, 1, 0, w(red)}, {0, 1, 1, w("1")}};
  return ColouredEdgeGraph(2, 2, edges);
}

}  // namespace

TEST_CASE("gap functions on the three-vertex example") {
  ColouredEdgeGraph g = three_vertex();
  REQUIRE(g.edge(kRedUV).source == 0);
  REQUIRE(g.edge(kRedUV).target == 2);
  REQUIRE(g.edge(kRedUV).colour == 0);

  DeltaAnalyzer a(g, 0, 2);
  CHECK(a.r_tot() == units("2"));
  CHECK(a.focus_edges() == std::vector<EdgeId>{0, 1, 2});
  CHECK(a.frontier() == std::vector<std::pair<Wide, Wide>>{
                            {0, units("2")}, {units("1"), units("1")}, {units("2"), 0}});

  CHECK(a.delta_e(kRedUV, 0) == units("3"));
  CHECK_FALSE(a.delta_e(kRedUV, units("3")).has_value());
  CHECK(a.delta(0) == units("1"));
  CHECK(a.delta(units("1")) == units("2"));
  CHECK(a.delta(units("2") - 1) == units("2"));
  CHECK_THROWS_AS(a.delta(units("2")), DomainError);
  CHECK_THROWS_AS(a.delta(-1), DomainError);
  CHECK_THROWS_AS(a.delta_e(3, 0), DomainError);

  DeltaQuery q{g, 0, 2, 0, 0, kRedUV};
  CHECK(delta_e(q) == units("3"));
  q.edge.reset();
  CHECK(delta(q) == units("1"));
  CHECK_THROWS(delta_e(q));
}

TEST_CASE("lemma 3 witnesses") {
  SUBCASE("three-vertex grid") {
    std::vector<Wide> grid{0, units("0.5"), units("1"), units("1.5")};
    Lemma3Report r = check_lemma3(three_vertex(), 0, 2, 0, grid);
    REQUIRE(r.points.size() == 4);
    CHECK(r.holds());
    for (const Lemma3Point& p : r.points) {
      CHECK(p.witness.has_value());
      CHECK(p.min_delta_e == p.delta);
    }
  }
  SUBCASE("single red edge") {
    Lemma3Report r = check_lemma3(two_vertex("0.5"), 0, 1, 0, uniform_grid(units("0.5"), 5));
    CHECK(r.holds());
    for (const Lemma3Point& p : r.points) CHECK(p.witness == EdgeId{0});
  }
  SUBCASE("random five-vertex instances, both focus colours") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      ColouredEdgeGraph g = gen_random(5, 2, 1.0, WeightDistribution::uniform(0, 1), seed);
      for (ColourId focus : {ColourId{0}, ColourId{1}}) {
        DeltaAnalyzer a(g, 0, 4, focus);
        std::vector<Wide> grid = uniform_grid(*a.r_tot(), 10);
        CHECK(check_lemma3(g, 0, 4, focus, grid).holds());
      }
    }
  }
}

TEST_CASE("delta shape on random instances") {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    ColouredEdgeGraph g = gen_random(5, 2, 0.8, WeightDistribution::uniform(0, 1), seed);
    ColouredEdgeGraph full = gen_random(5, 2, 1.0, WeightDistribution::uniform(0, 1), seed);
    const ColouredEdgeGraph& use = (g.edge_count() > 0 && [&] {
      try {
        DeltaAnalyzer probe(g, 0, 4);
        return probe.r_tot().has_value();
      } catch (const PreconditionError&) {
        return false;
      }
    }()) ? g : full;
    DeltaAnalyzer a(use, 0, 4);
    const Wide r_tot = *a.r_tot();
    std::vector<Wide> focus_weights;
    for (const auto& [f, o] : a.frontier()) focus_weights.push_back(f);
    Wide previous = 0;
    for (Wide r : uniform_grid(r_tot, 25)) {
      Wide d = a.delta(r);
      CHECK(d > r);
      CHECK(d >= previous);
      CHECK(d <= r_tot);
      CHECK(std::find(focus_weights.begin(), focus_weights.end(), d) != focus_weights.end());
      // Some focus edge attains delta(r); none is needed to be above r.
      bool attained = false;
      for (EdgeId e : a.focus_edges()) attained = attained || a.delta_e(e, r) == d;
      CHECK(attained);
      previous = d;
    }
  }
}

TEST_CASE("gap function preconditions") {
  std::vector<ColouredEdgeGraph::EdgeSpec> red_only{{0, 1, 0, w("1")}};
  CHECK_THROWS_AS(DeltaAnalyzer(ColouredEdgeGraph(2, 2, red_only), 0, 1), PreconditionError);
  std::vector<ColouredEdgeGraph::EdgeSpec> green_only{{0, 1, 1, w("1")}};
  DeltaAnalyzer no_focus(ColouredEdgeGraph(2, 2, green_only), 0, 1);
  CHECK_FALSE(no_focus.r_tot().has_value());
  CHECK_THROWS_AS(no_focus.delta(0), PreconditionError);
  CHECK_THROWS_AS(DeltaAnalyzer(ColouredEdgeGraph(2, 3, red_only), 0, 1), PreconditionError);
  CHECK_THROWS_AS(DeltaAnalyzer(three_vertex(), 0, 0), DomainError);
  CHECK_THROWS_AS(DeltaAnalyzer(three_vertex(), 0, 2, 2), DomainError);
}

TEST_CASE("lemma 2 frequency") {
  SUBCASE("threshold above the support: never an event") {
    Lemma2Config c;
    c.target = 2;
    c.edge = kRedUV;
    c.r = units("2.5");
    c.epsilon = units("0.4");
    c.trials = 2000;
    c.seed = 3;
    Lemma2Report r = check_lemma2(three_vertex(), c);
    CHECK(r.events == 0);
    CHECK(r.frequency == 0.0);
    CHECK(r.bound == doctest::Approx(0.4));
    CHECK(r.holds());
  }
  SUBCASE("two-vertex pair: frequency near the density integral") {
    Lemma2Config c;
    c.r = units("0.3");
    c.epsilon = units("0.2");
    c.trials = 20000;
    c.seed = 11;
    c.z = 3.0;
    Lemma2Report r = check_lemma2(two_vertex("0.5"), c);
    CHECK(r.finite == r.trials);
    CHECK(r.bound == doctest::Approx(0.2));
    CHECK(std::abs(r.frequency - 0.2) < 4 * std::sqrt(0.2 * 0.8 / 20000));
    CHECK(r.holds());
  }
  SUBCASE("tiny epsilon") {
    Lemma2Config c;
    c.r = units("0.3");
    c.epsilon = 1;
    c.trials = 5000;
    CHECK(check_lemma2(two_vertex("0.5"), c).events == 0);
  }
  SUBCASE("invalid configuration") {
    Lemma2Config c;
    c.epsilon = 0;
    CHECK_THROWS_AS(check_lemma2(two_vertex("0.5"), c), DomainError);
    c.epsilon = 1;
    c.edge = 1;  // green
    CHECK_THROWS_AS(check_lemma2(two_vertex("0.5"), c), DomainError);
  }
}

TEST_CASE("expected-count experiment") {
  SUBCASE("two vertices: two incomparable single edges every trial") {
    ExperimentConfig c;
    c.n = 2;
    c.trials = 200;
    ExperimentReport r = run_experiment(c);
    REQUIRE(r.trials.size() == 200);
    for (const TrialResult& t : r.trials) CHECK(t.distinct_minimal == 2);
    CHECK(r.hard_cap == 2);
    CHECK(r.cap_violations == 0);
    CHECK(r.trials.front().sum_phi == doctest::Approx(2.0));
  }
  SUBCASE("four vertices") {
    ExperimentConfig c;
    c.n = 4;
    c.trials = 300;
    c.seed = 42;
    ExperimentReport r = run_experiment(c);
    CHECK(r.hard_cap == 8);
    CHECK(r.max_count <= 8);
    // Twelve directed red edges, density bound 1.
    for (const TrialResult& t : r.trials) {
      CHECK(t.sum_phi == doctest::Approx(12.0));
      CHECK(t.bound == doctest::Approx(12.0 * static_cast<double>(t.r_tot) / 1e9 + 1.0));
    }
    CHECK(r.passed());
  }
  SUBCASE("invalid parameters") {
    ExperimentConfig c;
    c.trials = 0;
    CHECK_THROWS_AS(run_experiment(c), DomainError);
    c.trials = 1;
    c.focus = 2;
    CHECK_THROWS_AS(run_experiment(c), DomainError);
    c.focus = 0;
    c.n = 1;
    CHECK_THROWS_AS(run_experiment(c), DomainError);
  }
}
