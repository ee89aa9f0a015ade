#include "minpaths/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

#include "minpaths/enumeration.hpp"
#include "minpaths/error.hpp"

namespace minpaths {

namespace {

Weight power_of_two(std::uint32_t exponent, const FixedScale& scale) {
  if (exponent > 62) throw OverflowError("2^" + std::to_string(exponent) + " overflows");
  return scale.whole(std::int64_t{1} << exponent);
}

constexpr std::array<std::pair<VertexId, VertexId>, 3> kThreeVertexPairs{{
    {0, 1}, {1, 2}, {0, 2}}};
constexpr std::array<std::pair<VertexId, VertexId>, 7> kFourVertexPairs{{
    {0, 1}, {0, 3}, {0, 2}, {1, 3}, {2, 3}, {1, 2}, {2, 1}}};

}  // namespace

ColouredEdgeGraph gen_chain(const ChainSpec& spec) {
  if (spec.n < 2) throw DomainError("chain needs n >= 2");
  if (spec.k < 1) throw DomainError("chain needs k >= 1");
  const std::uint32_t stages = spec.n - 1;
  std::vector<Weight> stage(stages);
  switch (spec.rule) {
    case ChainSpec::Rule::doubling:
      for (std::uint32_t i = 0; i < stages; ++i) stage[i] = power_of_two(i, spec.scale);
      break;
    case ChainSpec::Rule::constant:
      std::fill(stage.begin(), stage.end(), spec.constant);
      break;
    case ChainSpec::Rule::explicit_list:
      if (spec.stage_weights.size() != stages) {
        throw DomainError("chain with n=" + std::to_string(spec.n) + " needs " +
                          std::to_string(stages) + " stage weights, got " +
                          std::to_string(spec.stage_weights.size()));
      }
      stage = spec.stage_weights;
      break;
  }
  std::vector<ColouredEdgeGraph::EdgeSpec> edges;
  edges.reserve(std::size_t{stages} * spec.k);
  for (std::uint32_t i = 0; i < stages; ++i) {
    if (!stage[i].positive()) throw DomainError("chain weights must be positive");
    for (ColourId c = 0; c < spec.k; ++c) edges.push_back({i, i + 1, c, stage[i]});
  }
  return ColouredEdgeGraph(spec.n, spec.k, edges, spec.scale);
}

ColouredEdgeGraph gen_theorem2_tight(std::uint32_t n, FixedScale scale) {
  if (n < 2) throw DomainError("tight example needs n >= 2");
  constexpr std::uint32_t k = 3;
  std::vector<ColouredEdgeGraph::EdgeSpec> edges;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      // 2^i + ... + 2^(j-1)
      Weight span(power_of_two(j, scale).units() - power_of_two(i, scale).units());
      for (ColourId c = 0; c < k; ++c) edges.push_back({i, j, c, span});
    }
  }
  return ColouredEdgeGraph(n, k, edges, scale);
}

std::size_t intro_weight_count(IntroExample which) {
  return which == IntroExample::three_vertex ? 2 * kThreeVertexPairs.size()
                                             : 2 * kFourVertexPairs.size();
}

ColouredEdgeGraph gen_intro_example(IntroExample which,
                                    std::span<const Weight> weights,
                                    FixedScale scale) {
  const std::size_t expected = intro_weight_count(which);
  if (weights.size() != expected) {
    throw DomainError("intro example needs " + std::to_string(expected) +
                      " weights, got " + std::to_string(weights.size()));
  }
  std::span<const std::pair<VertexId, VertexId>> pairs =
      which == IntroExample::three_vertex
          ? std::span<const std::pair<VertexId, VertexId>>(kThreeVertexPairs)
          : std::span<const std::pair<VertexId, VertexId>>(kFourVertexPairs);
  std::vector<ColouredEdgeGraph::EdgeSpec> edges;
  for (ColourId c = 0; c < 2; ++c) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      Weight w = weights[c * pairs.size() + i];
      if (!w.positive()) throw DomainError("intro example weights must be positive");
      edges.push_back({pairs[i].first, pairs[i].second, c, w});
    }
  }
  const std::uint32_t n = which == IntroExample::three_vertex ? 3 : 4;
  return ColouredEdgeGraph(n, 2, edges, scale);
}

ColouredEdgeGraph gen_random(std::uint32_t n, std::uint32_t k, double density,
                             const WeightDistribution& dist, Rng& rng,
                             FixedScale scale) {
  if (!(density > 0.0 && density <= 1.0)) {
    throw DomainError("density must lie in (0, 1]");
  }
  if (n < 1 || k < 1) throw DomainError("random graph needs n >= 1 and k >= 1");
  std::vector<ColouredEdgeGraph::EdgeSpec> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u == v) continue;
      for (ColourId c = 0; c < k; ++c) {
        // Draw both values for every slot so the weight stream does not
        // depend on which slots are kept.
        double keep = uniform_unit(rng);
        double value = dist.sample(rng);
        if (keep >= density) continue;
        Wide units = std::max<Wide>(1, scale.quantize(value));
        edges.push_back({u, v, c, Weight(static_cast<std::int64_t>(units))});
      }
    }
  }
  return ColouredEdgeGraph(n, k, edges, scale);
}

ColouredEdgeGraph gen_random(std::uint32_t n, std::uint32_t k, double density,
                             const WeightDistribution& dist, std::uint64_t seed,
                             FixedScale scale) {
  Rng rng(seed);
  return gen_random(n, k, density, dist, rng, scale);
}

ExtremalSearch search_four_vertex_extremal(std::uint64_t attempts,
                                           std::uint64_t seed) {
  ExtremalSearch result;
  Rng rng(seed);
  const FixedScale scale;
  const std::size_t count = intro_weight_count(IntroExample::four_vertex);
  std::vector<Weight> weights(count);
  for (std::uint64_t a = 0; a < attempts; ++a) {
    // Spread magnitudes over several orders so that both short and long
    // routes get a chance to be minimal.
    for (Weight& w : weights) {
      double magnitude = std::exp2(8.0 * uniform_unit(rng));
      w = Weight(static_cast<std::int64_t>(
          std::max<Wide>(1, scale.quantize(magnitude))));
    }
    ColouredEdgeGraph g = gen_intro_example(IntroExample::four_vertex, weights, scale);
    std::uint64_t distinct =
        enumerate_search(g, 0, 3, FrontierMode::frontier).distinct_weights();
    ++result.attempts;
    if (distinct > result.best_distinct) {
      result.best_distinct = distinct;
      result.best_weights = weights;
    }
  }
  return result;
}

}  // namespace minpaths
