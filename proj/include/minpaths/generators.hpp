#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "minpaths/distribution.hpp"
#include "minpaths/graph.hpp"

namespace minpaths {

/// Chain v0 -> v1 -> ... -> v(n-1) with k parallel edges (one per colour)
/// at every stage.
struct ChainSpec {
  enum class Rule {
    /// Stage i (0-based) weighs 2^i in every colour.
    doubling,
    /// Every edge weighs `constant`.
    constant,
    /// Stage i weighs `stage_weights[i]` in every colour.
    explicit_list,
  };

  std::uint32_t n = 2;
  std::uint32_t k = 1;
  Rule rule = Rule::doubling;
  Weight constant;
  std::vector<Weight> stage_weights;
  FixedScale scale;
};

ColouredEdgeGraph gen_chain(const ChainSpec& spec);

/// Three colours; every forward edge v_i -> v_j (i < j) weighs
/// 2^i + ... + 2^(j-1) in each colour. For n = 4 this gives stage weights
/// 1, 2, 4, skips 3 and 6, and the direct edge 7; all 3 * 4^2 paths from v0
/// to v3 are then minimal.
ColouredEdgeGraph gen_theorem2_tight(std::uint32_t n, FixedScale scale = FixedScale{});

enum class IntroExample {
  /// Vertices u=0, x=1, v=2. Weights in order
  /// r_ux, r_xv, r_uv, g_ux, g_xv, g_uv (red = colour 0).
  three_vertex,
  /// Vertices u=0, x=1, y=2, v=3. Seven vertex pairs in the order
  /// ux, uv, uy, xv, yv, xy, yx; all red weights, then all green.
  four_vertex,
};

std::size_t intro_weight_count(IntroExample which);

/// Throws DomainError when `weights` does not have intro_weight_count()
/// entries or any weight is not positive.
ColouredEdgeGraph gen_intro_example(IntroExample which,
                                    std::span<const Weight> weights,
                                    FixedScale scale = FixedScale{});

/// Each of the k n (n-1) slots (u, v, c) is filled independently with
/// probability `density`; weights are i.i.d. draws quantized to the grid
/// (at least one unit). Deterministic in (parameters, seed).
ColouredEdgeGraph gen_random(std::uint32_t n, std::uint32_t k, double density,
                             const WeightDistribution& dist, std::uint64_t seed,
                             FixedScale scale = FixedScale{});

/// Same, drawing from a caller-owned stream.
ColouredEdgeGraph gen_random(std::uint32_t n, std::uint32_t k, double density,
                             const WeightDistribution& dist, Rng& rng,
                             FixedScale scale = FixedScale{});

struct ExtremalSearch {
  std::uint64_t best_distinct = 0;
  std::uint64_t attempts = 0;
  std::vector<Weight> best_weights;
};

/// Randomized restarts over weights of the four-vertex intro graph, looking
/// for the largest number of distinct minimal weights from u to v.
ExtremalSearch search_four_vertex_extremal(std::uint64_t attempts,
                                           std::uint64_t seed);

}  // namespace minpaths
