#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "minpaths/graph.hpp"

namespace minpaths {

enum class FrontierMode {
  /// One witness per distinct minimal weight.
  frontier,
  /// Every minimal path, including ties in weight.
  all_minimal,
};

struct FrontierEntry {
  PathWeight weight;
  /// Sorted by shorter_then_lexicographic.
  std::vector<Path> witnesses;
};

/// Pareto-minimal weights from `source` to `target`, entries sorted
/// lexicographically by weight.
struct ParetoFrontier {
  VertexId source = 0;
  VertexId target = 0;
  FrontierMode mode = FrontierMode::frontier;
  std::vector<FrontierEntry> entries;

  std::size_t distinct_weights() const noexcept { return entries.size(); }
  std::size_t total_paths() const noexcept;
  bool empty() const noexcept { return entries.empty(); }
};

inline constexpr std::uint64_t kDefaultPathLimit = 10'000'000;

struct OracleOptions {
  /// Refuse instances whose simple-path count may exceed this.
  std::uint64_t path_limit = kDefaultPathLimit;
};

/// Visits every simple path source -> target in depth-first order (out-edges
/// in id order). Returns the number of paths visited. Throws TooLargeError
/// once more than `limit` paths have been produced.
std::uint64_t for_each_simple_path(const ColouredEdgeGraph& graph,
                                   VertexId source, VertexId target,
                                   const std::function<void(const Path&)>& visit,
                                   std::uint64_t limit = kDefaultPathLimit);

std::uint64_t count_simple_paths(const ColouredEdgeGraph& graph, VertexId source,
                                 VertexId target,
                                 std::uint64_t limit = kDefaultPathLimit);

/// Exhaustive baseline: every simple path is weighed and the nondominated
/// ones are kept. Refuses (TooLargeError) when the closed-form simple-path
/// bound for the graph exceeds `options.path_limit`.
ParetoFrontier enumerate_oracle(const ColouredEdgeGraph& graph, VertexId source,
                                VertexId target, FrontierMode mode,
                                const OracleOptions& options = {});

/// Multi-objective label-setting search. Same output contract as
/// enumerate_oracle.
ParetoFrontier enumerate_search(const ColouredEdgeGraph& graph, VertexId source,
                                VertexId target, FrontierMode mode);

struct MinimalCounts {
  std::uint64_t distinct_weights = 0;
  std::uint64_t total_minimal_paths = 0;

  friend bool operator==(const MinimalCounts&, const MinimalCounts&) = default;
};

MinimalCounts count_minimal(const ColouredEdgeGraph& graph, VertexId source,
                            VertexId target);

}  // namespace minpaths
