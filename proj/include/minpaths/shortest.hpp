#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "minpaths/graph.hpp"

namespace minpaths {

inline constexpr Wide kUnreachable = std::numeric_limits<std::int64_t>::max();

/// Single-colour shortest-path distances from `source` using only edges of
/// `colour` (Dijkstra). Unreachable vertices are nullopt.
std::vector<std::optional<Wide>> colour_distances(const ColouredEdgeGraph& graph,
                                                  ColourId colour,
                                                  VertexId source);

/// Dense n x n matrix of single-colour distances; kUnreachable marks a
/// missing route. Diagonal entries are 0.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(std::uint32_t n = 0)
      : n_(n), cells_(static_cast<std::size_t>(n) * n, kUnreachable) {
    for (std::uint32_t v = 0; v < n; ++v) at(v, v) = 0;
  }

  std::uint32_t size() const noexcept { return n_; }
  Wide& at(VertexId x, VertexId y) { return cells_[std::size_t{x} * n_ + y]; }
  Wide at(VertexId x, VertexId y) const { return cells_[std::size_t{x} * n_ + y]; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::uint32_t n_;
  std::vector<Wide> cells_;
};

/// Floyd-Warshall over the subgraph of one colour.
DistanceMatrix colour_all_pairs(const ColouredEdgeGraph& graph, ColourId colour);

/// One matrix per colour, colours processed in parallel (OpenMP).
/// `jobs` <= 0 uses the runtime default.
std::vector<DistanceMatrix> all_colour_all_pairs(const ColouredEdgeGraph& graph,
                                                 int jobs = 0);

/// Serial reference for all_colour_all_pairs.
std::vector<DistanceMatrix> all_colour_all_pairs_serial(
    const ColouredEdgeGraph& graph);

/// Number of worker threads to use for `requested` (<= 0: runtime default).
int resolve_jobs(int requested);

}  // namespace minpaths
