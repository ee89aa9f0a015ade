#include "minpaths/enumeration.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "minpaths/bounds.hpp"
#include "minpaths/dominance.hpp"
#include "minpaths/error.hpp"

namespace minpaths {

namespace {

void check_endpoints(const ColouredEdgeGraph& graph, VertexId source,
                     VertexId target) {
  if (source >= graph.vertex_count() || target >= graph.vertex_count()) {
    throw DomainError("source/target outside [0, " +
                      std::to_string(graph.vertex_count()) + ")");
  }
  for (const Edge& e : graph.edges()) {
    if (!e.weight.positive()) {
      throw PreconditionError("edge " + std::to_string(e.id) +
                              " has non-positive weight");
    }
  }
}

ParetoFrontier trivial_frontier(const ColouredEdgeGraph& graph, VertexId v,
                                FrontierMode mode) {
  ParetoFrontier result{v, v, mode, {}};
  result.entries.push_back(
      FrontierEntry{PathWeight(graph.colour_count()), {Path{v, v, {}}}});
  return result;
}

ParetoFrontier assemble(VertexId source, VertexId target, FrontierMode mode,
                        std::map<PathWeight, std::vector<Path>> groups) {
  ParetoFrontier result{source, target, mode, {}};
  result.entries.reserve(groups.size());
  for (auto& [weight, paths] : groups) {
    std::sort(paths.begin(), paths.end(), shorter_then_lexicographic);
    if (mode == FrontierMode::frontier) paths.resize(1);
    result.entries.push_back(FrontierEntry{weight, std::move(paths)});
  }
  return result;
}

std::uint32_t max_parallel_edges(const ColouredEdgeGraph& graph) {
  std::map<std::pair<VertexId, VertexId>, std::uint32_t> multiplicity;
  std::uint32_t most = 0;
  for (const Edge& e : graph.edges()) {
    most = std::max(most, ++multiplicity[{e.source, e.target}]);
  }
  return most;
}

struct DepthFirst {
  const ColouredEdgeGraph& graph;
  VertexId target;
  const std::function<void(const Path&)>& visit;
  std::uint64_t limit;
  std::vector<bool> on_path;
  Path path;
  std::uint64_t visited = 0;

  void run(VertexId at) {
    if (at == target) {
      if (++visited > limit) {
        throw TooLargeError("more than " + std::to_string(limit) +
                            " simple paths");
      }
      visit(path);
      return;
    }
    for (EdgeId id : graph.out_edges(at)) {
      const Edge& e = graph.edge(id);
      if (on_path[e.target]) continue;
      on_path[e.target] = true;
      path.edges.push_back(id);
      run(e.target);
      path.edges.pop_back();
      on_path[e.target] = false;
    }
  }
};

struct Label {
  Wide key = 0;
  std::vector<EdgeId> edges;
  VertexId at = 0;
  PathWeight weight;
};

// Min-heap order: colour-blind total, then length, then edge ids.
struct LabelAfter {
  bool operator()(const Label& a, const Label& b) const {
    if (a.key != b.key) return a.key > b.key;
    if (a.edges.size() != b.edges.size()) return a.edges.size() > b.edges.size();
    return a.edges > b.edges;
  }
};

bool pruned_by(const std::vector<PathWeight>& settled, const PathWeight& weight,
               FrontierMode mode) {
  for (const PathWeight& other : settled) {
    Dominance d = compare(other, weight);
    if (d == Dominance::first_dominates) return true;
    if (d == Dominance::equal && mode == FrontierMode::frontier) return true;
  }
  return false;
}

}  // namespace

std::size_t ParetoFrontier::total_paths() const noexcept {
  std::size_t total = 0;
  for (const FrontierEntry& entry : entries) total += entry.witnesses.size();
  return total;
}

std::uint64_t for_each_simple_path(const ColouredEdgeGraph& graph,
                                   VertexId source, VertexId target,
                                   const std::function<void(const Path&)>& visit,
                                   std::uint64_t limit) {
  if (source >= graph.vertex_count() || target >= graph.vertex_count()) {
    throw DomainError("source/target outside [0, " +
                      std::to_string(graph.vertex_count()) + ")");
  }
  DepthFirst dfs{graph, target, visit, limit,
                 std::vector<bool>(graph.vertex_count(), false),
                 Path{source, target, {}}};
  dfs.on_path[source] = true;
  dfs.run(source);
  return dfs.visited;
}

std::uint64_t count_simple_paths(const ColouredEdgeGraph& graph, VertexId source,
                                 VertexId target, std::uint64_t limit) {
  return for_each_simple_path(graph, source, target, [](const Path&) {}, limit);
}

ParetoFrontier enumerate_oracle(const ColouredEdgeGraph& graph, VertexId source,
                                VertexId target, FrontierMode mode,
                                const OracleOptions& options) {
  check_endpoints(graph, source, target);
  if (source == target) return trivial_frontier(graph, source, mode);

  const std::uint32_t multiplicity = max_parallel_edges(graph);
  if (multiplicity == 0) return ParetoFrontier{source, target, mode, {}};
  bool too_large = false;
  try {
    too_large = simple_path_bound(graph.vertex_count(), multiplicity) >
                options.path_limit;
  } catch (const OverflowError&) {
    too_large = true;
  }
  if (too_large) {
    throw TooLargeError("simple-path bound for n=" +
                        std::to_string(graph.vertex_count()) + ", k=" +
                        std::to_string(multiplicity) + " exceeds the limit " +
                        std::to_string(options.path_limit));
  }

  std::map<PathWeight, std::vector<Path>> by_weight;
  for_each_simple_path(
      graph, source, target,
      [&](const Path& p) { by_weight[path_weight(graph, p)].push_back(p); },
      options.path_limit);

  // Keep the weights no other weight strictly dominates. Distinct weights
  // sorted by total: a dominator always has a smaller total.
  std::vector<const PathWeight*> order;
  order.reserve(by_weight.size());
  for (const auto& [weight, paths] : by_weight) order.push_back(&weight);
  std::stable_sort(order.begin(), order.end(),
                   [](const PathWeight* a, const PathWeight* b) {
                     return a->total() < b->total();
                   });
  std::vector<const PathWeight*> skyline;
  for (const PathWeight* candidate : order) {
    bool dominated = std::any_of(skyline.begin(), skyline.end(),
                                 [&](const PathWeight* kept) {
                                   return strictly_dominates(*kept, *candidate);
                                 });
    if (!dominated) skyline.push_back(candidate);
  }

  std::map<PathWeight, std::vector<Path>> minimal;
  for (const PathWeight* weight : skyline) {
    minimal.emplace(*weight, std::move(by_weight.at(*weight)));
  }
  return assemble(source, target, mode, std::move(minimal));
}

ParetoFrontier enumerate_search(const ColouredEdgeGraph& graph, VertexId source,
                                VertexId target, FrontierMode mode) {
  check_endpoints(graph, source, target);
  if (source == target) return trivial_frontier(graph, source, mode);

  std::vector<std::vector<PathWeight>> settled(graph.vertex_count());
  std::map<PathWeight, std::vector<Path>> at_target;
  std::priority_queue<Label, std::vector<Label>, LabelAfter> open;
  open.push(Label{0, {}, source, PathWeight(graph.colour_count())});

  // A label that revisits a vertex is strictly dominated by its cycle-free
  // reduction, which has a smaller key and is settled first, so no explicit
  // simplicity check is needed.
  while (!open.empty()) {
    Label label = open.top();
    open.pop();
    std::vector<PathWeight>& bucket = settled[label.at];
    if (pruned_by(bucket, label.weight, mode)) continue;
    bucket.push_back(label.weight);

    if (label.at == target) {
      at_target[label.weight].push_back(Path{source, target, std::move(label.edges)});
      continue;
    }
    for (EdgeId id : graph.out_edges(label.at)) {
      const Edge& e = graph.edge(id);
      if (e.target == source) continue;
      PathWeight next = label.weight;
      next[e.colour] += e.weight.units();
      if (pruned_by(settled[e.target], next, mode)) continue;
      std::vector<EdgeId> edges = label.edges;
      edges.push_back(id);
      open.push(Label{label.key + e.weight.units(), std::move(edges), e.target,
                      std::move(next)});
    }
  }
  return assemble(source, target, mode, std::move(at_target));
}

MinimalCounts count_minimal(const ColouredEdgeGraph& graph, VertexId source,
                            VertexId target) {
  ParetoFrontier all = enumerate_search(graph, source, target,
                                        FrontierMode::all_minimal);
  return MinimalCounts{all.distinct_weights(), all.total_paths()};
}

}  // namespace minpaths
