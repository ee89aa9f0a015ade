#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "minpaths/graph.hpp"

namespace minpaths {

/// Text edge-list format:
///
///   # comment
///   n k
///   u v c w        (one line per edge; w a positive decimal)
///
/// Edge ids follow line order. Any rule violation (self-loop, duplicate
/// (u, v, c), w <= 0, colour >= k, vertex >= n) raises ParseError.
ColouredEdgeGraph read_graph(std::istream& in, FixedScale scale = FixedScale{});
ColouredEdgeGraph read_graph(std::string_view text,
                             FixedScale scale = FixedScale{});

struct WriteOptions {
  /// Emitted as `# ...` lines directly after the header.
  std::vector<std::string> comments;
};

void write_graph(std::ostream& out, const ColouredEdgeGraph& graph,
                 const WriteOptions& options = {});
std::string write_graph(const ColouredEdgeGraph& graph,
                        const WriteOptions& options = {});

}  // namespace minpaths
