#include "minpaths/graph.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "minpaths/error.hpp"

namespace minpaths {

ColouredEdgeGraph::ColouredEdgeGraph(std::uint32_t vertex_count,
                                     std::uint32_t colour_count,
                                     std::span<const EdgeSpec> edges,
                                     FixedScale scale)
    : n_(vertex_count), k_(colour_count), scale_(scale) {
  edges_.reserve(edges.size());
  for (const EdgeSpec& spec : edges) {
    if (spec.source >= n_ || spec.target >= n_) {
      throw DomainError("edge " + std::to_string(edges_.size()) +
                        " has a vertex outside [0, " + std::to_string(n_) +
                        ")");
    }
    if (spec.colour >= k_) {
      throw DomainError("edge " + std::to_string(edges_.size()) +
                        " has colour outside [0, " + std::to_string(k_) + ")");
    }
    edges_.push_back(Edge{static_cast<EdgeId>(edges_.size()), spec.source,
                          spec.target, spec.colour, spec.weight});
  }
  build_index();
}

void ColouredEdgeGraph::build_index() {
  out_offset_.assign(n_ + 1, 0);
  for (const Edge& e : edges_) ++out_offset_[e.source + 1];
  for (std::uint32_t v = 0; v < n_; ++v) out_offset_[v + 1] += out_offset_[v];
  out_ids_.resize(edges_.size());
  std::vector<std::uint32_t> cursor(out_offset_.begin(), out_offset_.end() - 1);
  for (const Edge& e : edges_) out_ids_[cursor[e.source]++] = e.id;
}

const Edge& ColouredEdgeGraph::edge(EdgeId id) const {
  if (id >= edges_.size()) {
    throw InvalidPathError("unknown edge id " + std::to_string(id));
  }
  return edges_[id];
}

std::span<const EdgeId> ColouredEdgeGraph::out_edges(VertexId v) const {
  if (v >= n_) throw DomainError("vertex " + std::to_string(v) + " out of range");
  return std::span<const EdgeId>(out_ids_)
      .subspan(out_offset_[v], out_offset_[v + 1] - out_offset_[v]);
}

ColouredEdgeGraph ColouredEdgeGraph::with_weight(EdgeId id,
                                                 Weight weight) const {
  ColouredEdgeGraph copy = *this;
  copy.edges_.at(id).weight = weight;
  return copy;
}

bool shorter_then_lexicographic(const Path& a, const Path& b) {
  if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
  return a.edges < b.edges;
}

Wide PathWeight::total() const noexcept {
  Wide sum = 0;
  for (Wide c : components_) sum += c;
  return sum;
}

PathWeight& PathWeight::operator+=(const PathWeight& other) {
  if (other.arity() != arity()) {
    throw DomainError("path weight arity mismatch");
  }
  for (std::size_t c = 0; c < components_.size(); ++c) {
    components_[c] += other.components_[c];
  }
  return *this;
}

PathWeight path_weight(const ColouredEdgeGraph& graph, const Path& path) {
  PathWeight weight(graph.colour_count());
  VertexId at = path.source;
  for (EdgeId id : path.edges) {
    const Edge& e = graph.edge(id);
    if (e.source != at) {
      throw InvalidPathError("edge " + std::to_string(id) +
                             " does not start at vertex " + std::to_string(at));
    }
    weight[e.colour] += e.weight.units();
    at = e.target;
  }
  if (at != path.target) {
    throw InvalidPathError("path ends at vertex " + std::to_string(at) +
                           ", expected " + std::to_string(path.target));
  }
  return weight;
}

bool is_simple(const ColouredEdgeGraph& graph, const Path& path) {
  std::vector<bool> left(graph.vertex_count(), false);
  std::vector<bool> entered(graph.vertex_count(), false);
  for (EdgeId id : path.edges) {
    const Edge& e = graph.edge(id);
    if (left[e.source] || entered[e.target]) return false;
    left[e.source] = true;
    entered[e.target] = true;
  }
  return true;
}

bool ValidationResult::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

bool ValidationResult::structurally_sound() const {
  return std::all_of(violations.begin(), violations.end(), [](const Violation& v) {
    return v.kind == ViolationKind::colour_gap;
  });
}

ValidationResult validate(const ColouredEdgeGraph& graph) {
  ValidationResult result;
  auto report = [&](ViolationKind kind, std::uint32_t subject, std::string msg) {
    result.violations.push_back(Violation{kind, subject, std::move(msg)});
  };

  std::map<std::tuple<VertexId, VertexId, ColourId>, EdgeId> seen;
  std::vector<bool> used(graph.colour_count(), false);
  for (const Edge& e : graph.edges()) {
    used[e.colour] = true;
    if (e.source == e.target) {
      report(ViolationKind::self_loop, e.id,
             "edge " + std::to_string(e.id) + " is a self-loop at vertex " +
                 std::to_string(e.source));
    }
    if (!e.weight.positive()) {
      report(ViolationKind::non_positive_weight, e.id,
             "edge " + std::to_string(e.id) + " has non-positive weight");
    }
    auto [it, inserted] = seen.emplace(std::tuple{e.source, e.target, e.colour}, e.id);
    if (!inserted) {
      report(ViolationKind::duplicate_edge, e.id,
             "edge " + std::to_string(e.id) + " duplicates edge " +
                 std::to_string(it->second) + " (" + std::to_string(e.source) +
                 ", " + std::to_string(e.target) + ", colour " +
                 std::to_string(e.colour) + ")");
    }
  }
  for (ColourId c = 0; c < graph.colour_count(); ++c) {
    if (!used[c]) {
      report(ViolationKind::colour_gap, c,
             "colour " + std::to_string(c) + " has no edges");
    }
  }
  const std::uint64_t n = graph.vertex_count();
  const std::uint64_t bound = graph.colour_count() * n * (n == 0 ? 0 : n - 1);
  if (graph.edge_count() > bound) {
    report(ViolationKind::edge_bound, 0,
           std::to_string(graph.edge_count()) + " edges exceed k*n*(n-1) = " +
               std::to_string(bound));
  }
  return result;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::self_loop: return "self-loop";
    case ViolationKind::duplicate_edge: return "duplicate-edge";
    case ViolationKind::non_positive_weight: return "non-positive-weight";
    case ViolationKind::colour_gap: return "colour-gap";
    case ViolationKind::edge_bound: return "edge-bound";
  }
  return "unknown";
}

}  // namespace minpaths
