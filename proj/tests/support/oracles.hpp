#pragma once

// Test-only reference computations. Nothing here calls into the
// enumeration, canonical or bounds code it is used to check.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "minpaths/graph.hpp"

namespace oracle {

using minpaths::ColouredEdgeGraph;
using minpaths::Wide;
using BigInt = boost::multiprecision::cpp_int;

/// Weight tuple -> number of simple paths with that weight.
using WeightCounts = std::map<std::vector<Wide>, std::uint64_t>;

/// All simple source->target paths, found by extending vertex sequences
/// and trying every parallel edge; weights summed per colour.
struct NaivePaths {
  std::vector<std::vector<Wide>> weights;
  std::vector<std::vector<minpaths::EdgeId>> edges;
};
NaivePaths naive_simple_paths(const ColouredEdgeGraph& graph,
                              minpaths::VertexId source,
                              minpaths::VertexId target);

/// Minimal weights with their multiplicities, by pairwise comparison of
/// every path against every other path.
WeightCounts naive_minimal(const ColouredEdgeGraph& graph,
                           minpaths::VertexId source, minpaths::VertexId target);

/// Number of simple u->v paths in the complete k-coloured graph on n
/// vertices, counted by enumerating intermediate vertex sequences.
BigInt complete_graph_simple_paths(unsigned n, unsigned k);
BigInt pow_big(unsigned base, unsigned exponent);

/// Bellman-Ford over one colour class.
std::optional<Wide> colour_shortest(const ColouredEdgeGraph& graph,
                                    minpaths::ColourId colour,
                                    minpaths::VertexId source,
                                    minpaths::VertexId target);

/// Random graph with small integer weights in [1, max_weight] (whole units)
/// so that equal path weights are common.
ColouredEdgeGraph small_integer_graph(unsigned n, unsigned k, double density,
                                      unsigned max_weight, std::uint64_t seed);

/// Weight in units for a decimal literal at the default scale.
minpaths::Weight w(const std::string& decimal);
Wide units(const std::string& decimal);

}  // namespace oracle
