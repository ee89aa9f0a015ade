#include "minpaths/canonical.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "minpaths/error.hpp"
#include "minpaths/shortest.hpp"

namespace minpaths {

namespace {

// Edge id per (colour, x, y); kMissing when absent, kAmbiguous when repeated.
class SlotTable {
 public:
  static constexpr EdgeId kMissing = std::numeric_limits<EdgeId>::max();
  static constexpr EdgeId kAmbiguous = kMissing - 1;

  explicit SlotTable(const ColouredEdgeGraph& graph)
      : n_(graph.vertex_count()),
        slots_(std::size_t{graph.colour_count()} * n_ * n_, kMissing) {
    for (const Edge& e : graph.edges()) {
      EdgeId& slot = at(e.colour, e.source, e.target);
      slot = slot == kMissing ? e.id : kAmbiguous;
    }
  }

  EdgeId& at(ColourId c, VertexId x, VertexId y) {
    return slots_[(std::size_t{c} * n_ + x) * n_ + y];
  }

 private:
  std::size_t n_;
  std::vector<EdgeId> slots_;
};

}  // namespace

CanonicalReport is_canonical(const ColouredEdgeGraph& graph) {
  const std::uint32_t n = graph.vertex_count();
  SlotTable slots(graph);
  CanonicalReport report;
  report.complete_per_colour = true;
  for (ColourId c = 0; c < graph.colour_count(); ++c) {
    for (VertexId x = 0; x < n; ++x) {
      for (VertexId y = 0; y < n; ++y) {
        if (x == y) continue;
        EdgeId id = slots.at(c, x, y);
        if (id == SlotTable::kMissing || id == SlotTable::kAmbiguous) {
          report.complete_per_colour = false;
        }
      }
    }
  }
  auto weight = [&](ColourId c, VertexId a, VertexId b) -> std::optional<Wide> {
    EdgeId id = slots.at(c, a, b);
    if (id == SlotTable::kMissing || id == SlotTable::kAmbiguous) return std::nullopt;
    return graph.edge(id).weight.units();
  };
  for (ColourId c = 0; c < graph.colour_count(); ++c) {
    for (VertexId x = 0; x < n; ++x) {
      for (VertexId y = 0; y < n; ++y) {
        if (y == x) continue;
        auto xy = weight(c, x, y);
        if (!xy) continue;
        for (VertexId z = 0; z < n; ++z) {
          if (z == x || z == y) continue;
          auto yz = weight(c, y, z);
          auto xz = weight(c, x, z);
          if (yz && xz && *xz > *xy + *yz) {
            report.triangle_violations.push_back({x, y, z, c});
          }
        }
      }
    }
  }
  return report;
}

CanonicalGraph canonicalize(const ColouredEdgeGraph& graph, int jobs) {
  const std::uint32_t n = graph.vertex_count();
  if (n < 2) throw DomainError("canonicalize needs at least two vertices");
  if (graph.edge_count() == 0) {
    throw DomainError("canonicalize needs at least one edge");
  }
  ValidationResult validation = validate(graph);
  if (!validation.structurally_sound()) {
    throw PreconditionError("canonicalize needs a valid graph: " +
                            validation.violations.front().message);
  }

  std::int64_t heaviest = 0;
  for (const Edge& e : graph.edges()) heaviest = std::max(heaviest, e.weight.units());
  const Wide filler = Wide{n} * heaviest;
  if (filler > std::numeric_limits<std::int64_t>::max()) {
    throw OverflowError("completion weight n*w does not fit in 64-bit units");
  }

  std::vector<ColouredEdgeGraph::EdgeSpec> specs;
  specs.reserve(std::size_t{graph.colour_count()} * n * (n - 1));
  for (const Edge& e : graph.edges()) {
    specs.push_back({e.source, e.target, e.colour, e.weight});
  }
  SlotTable slots(graph);
  for (ColourId c = 0; c < graph.colour_count(); ++c) {
    for (VertexId x = 0; x < n; ++x) {
      for (VertexId y = 0; y < n; ++y) {
        if (x != y && slots.at(c, x, y) == SlotTable::kMissing) {
          specs.push_back({x, y, c, Weight(static_cast<std::int64_t>(filler))});
        }
      }
    }
  }
  ColouredEdgeGraph completed(n, graph.colour_count(), specs, graph.scale());

  std::vector<DistanceMatrix> distances = all_colour_all_pairs(completed, jobs);
  for (auto& spec : specs) {
    Wide shortest = distances[spec.colour].at(spec.source, spec.target);
    spec.weight = Weight(static_cast<std::int64_t>(shortest));
  }
  return CanonicalGraph{
      ColouredEdgeGraph(n, graph.colour_count(), specs, graph.scale()),
      graph.edge_count()};
}

}  // namespace minpaths
