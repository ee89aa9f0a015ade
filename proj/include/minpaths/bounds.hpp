#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "minpaths/enumeration.hpp"
#include "minpaths/graph.hpp"

namespace minpaths {

/// 1024-bit unsigned integer that throws on overflow instead of wrapping.
using BoundInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<
    1024, 1024, boost::multiprecision::unsigned_magnitude,
    boost::multiprecision::checked, void>>;

struct BoundSet {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  /// sum_{l=1}^{n-1} k^l (n-2)!/(n-1-l)!
  BoundInt simple_path_max;
  /// k^(n-1): incomparable minimal paths.
  BoundInt incomparable_max;
  /// k (k+1)^(n-2): all minimal paths, one edge per (u, v, colour).
  BoundInt total_minimal_max;
  /// k n (n-1)
  BoundInt edge_max;
  /// n^2 - 3n + 3; only reported for bicoloured graphs.
  std::optional<BoundInt> red_edge_max;
};

/// Requires n >= 2 and k >= 1 (DomainError). Throws OverflowError when a
/// value exceeds the 1024-bit domain.
BoundSet compute_bounds(std::uint32_t n, std::uint32_t k);

/// Closed-form simple-path count only; cheaper than compute_bounds.
BoundInt simple_path_bound(std::uint32_t n, std::uint32_t k);

struct ComplianceReport {
  VertexId source = 0;
  VertexId target = 0;
  BoundSet bounds;
  MinimalCounts observed;
  /// Whether the graph has at most one edge per (u, v, colour); the
  /// total-minimal bound is only asserted when it does.
  bool single_edge_per_colour = true;

  bool incomparable_ok() const { return observed.distinct_weights <= bounds.incomparable_max; }
  bool total_ok() const { return observed.total_minimal_paths <= bounds.total_minimal_max; }
  bool incomparable_tight() const { return observed.distinct_weights == bounds.incomparable_max; }
  bool total_tight() const { return observed.total_minimal_paths == bounds.total_minimal_max; }
  /// True when an asserted bound is exceeded.
  bool violated() const {
    return !incomparable_ok() || (single_edge_per_colour && !total_ok());
  }
};

ComplianceReport check_instance(const ColouredEdgeGraph& graph, VertexId source,
                                VertexId target);

std::string to_string(const BoundInt& value);

}  // namespace minpaths
