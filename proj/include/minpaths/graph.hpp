#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "minpaths/fixed_point.hpp"

namespace minpaths {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using ColourId = std::uint32_t;

struct Edge {
  EdgeId id = 0;
  VertexId source = 0;
  VertexId target = 0;
  ColourId colour = 0;
  Weight weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Directed multigraph whose edges each carry a positive weight and one of
/// `k` colours. Immutable after construction; edge ids are positions in
/// `edges()`.
///
/// Construction only enforces what indexing needs (vertex and colour ranges).
/// The remaining model rules (no self-loops, one edge per (u, v, colour),
/// positive weights, every colour used) are reported by validate().
class ColouredEdgeGraph {
 public:
  struct EdgeSpec {
    VertexId source;
    VertexId target;
    ColourId colour;
    Weight weight;
  };

  ColouredEdgeGraph() = default;
  ColouredEdgeGraph(std::uint32_t vertex_count, std::uint32_t colour_count,
                    std::span<const EdgeSpec> edges,
                    FixedScale scale = FixedScale{});

  std::uint32_t vertex_count() const noexcept { return n_; }
  std::uint32_t colour_count() const noexcept { return k_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const FixedScale& scale() const noexcept { return scale_; }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const;

  /// Outgoing edge ids of `v` in increasing id order.
  std::span<const EdgeId> out_edges(VertexId v) const;

  /// Copy with one edge weight replaced.
  ColouredEdgeGraph with_weight(EdgeId id, Weight weight) const;

  friend bool operator==(const ColouredEdgeGraph& a,
                         const ColouredEdgeGraph& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.edges_ == b.edges_;
  }

 private:
  void build_index();

  std::uint32_t n_ = 0;
  std::uint32_t k_ = 0;
  FixedScale scale_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> out_offset_;
  std::vector<EdgeId> out_ids_;
};

/// Edge sequence from `source` to `target`. The empty path has
/// source == target.
struct Path {
  VertexId source = 0;
  VertexId target = 0;
  std::vector<EdgeId> edges;

  friend bool operator==(const Path&, const Path&) = default;
};

/// Orders paths by length, then lexicographically by edge ids.
bool shorter_then_lexicographic(const Path& a, const Path& b);

/// k-tuple of per-colour totals along a path.
class PathWeight {
 public:
  PathWeight() = default;
  explicit PathWeight(std::size_t arity) : components_(arity, 0) {}
  explicit PathWeight(std::vector<Wide> components)
      : components_(std::move(components)) {}

  std::size_t arity() const noexcept { return components_.size(); }
  Wide operator[](std::size_t colour) const { return components_[colour]; }
  Wide& operator[](std::size_t colour) { return components_[colour]; }
  std::span<const Wide> components() const noexcept { return components_; }

  /// Colour-blind total.
  Wide total() const noexcept;

  PathWeight& operator+=(const PathWeight& other);
  friend PathWeight operator+(PathWeight a, const PathWeight& b) {
    a += b;
    return a;
  }

  /// Lexicographic; used only for deterministic ordering, not dominance.
  friend auto operator<=>(const PathWeight&, const PathWeight&) = default;
  friend bool operator==(const PathWeight&, const PathWeight&) = default;

 private:
  std::vector<Wide> components_;
};

/// Throws InvalidPathError on an unknown edge id or a broken chain.
PathWeight path_weight(const ColouredEdgeGraph& graph, const Path& path);

/// True iff no two edges share an initial vertex nor a terminal vertex.
bool is_simple(const ColouredEdgeGraph& graph, const Path& path);

enum class ViolationKind {
  self_loop,
  duplicate_edge,
  non_positive_weight,
  colour_gap,
  edge_bound,
};

struct Violation {
  ViolationKind kind;
  /// Offending edge, or the unused colour for colour_gap.
  std::uint32_t subject = 0;
  std::string message;
};

struct ValidationResult {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(ViolationKind kind) const;
  /// True iff the only problems are unused colours.
  bool structurally_sound() const;
};

ValidationResult validate(const ColouredEdgeGraph& graph);

std::string_view to_string(ViolationKind kind);

}  // namespace minpaths
