#pragma once

#include <vector>

#include "minpaths/graph.hpp"

namespace minpaths {

struct TriangleViolation {
  VertexId x = 0;
  VertexId y = 0;
  VertexId z = 0;
  ColourId colour = 0;

  friend bool operator==(const TriangleViolation&, const TriangleViolation&) = default;
};

struct CanonicalReport {
  /// Exactly one edge of every colour between every ordered pair x != y.
  bool complete_per_colour = false;
  /// Same-colour triples with w(x->z) > w(x->y) + w(y->z).
  std::vector<TriangleViolation> triangle_violations;

  bool canonical() const noexcept {
    return complete_per_colour && triangle_violations.empty();
  }
};

CanonicalReport is_canonical(const ColouredEdgeGraph& graph);

struct CanonicalGraph {
  ColouredEdgeGraph graph;
  /// Edges with id < original_edge_count are the input edges (same ids and
  /// colours, possibly lowered weights); the rest were added.
  std::size_t original_edge_count = 0;
};

/// Completes every colour class by adding the missing (x, y, c) edges with
/// weight n * w (w the largest edge weight of the graph), then reweights
/// each edge to the single-colour shortest distance between its endpoints.
/// Requires a valid graph with n >= 2 and at least one edge.
/// `jobs` controls the per-colour parallelism (<= 0: runtime default).
CanonicalGraph canonicalize(const ColouredEdgeGraph& graph, int jobs = 0);

}  // namespace minpaths
