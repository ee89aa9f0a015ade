#include "minpaths/shortest.hpp"

#include <functional>
#include <queue>
#include <utility>

#include <omp.h>

namespace minpaths {

std::vector<std::optional<Wide>> colour_distances(const ColouredEdgeGraph& graph,
                                                  ColourId colour,
                                                  VertexId source) {
  std::vector<std::optional<Wide>> dist(graph.vertex_count());
  using Item = std::pair<Wide, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist.at(source) = 0;
  queue.emplace(0, source);
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (d != *dist[v]) continue;
    for (EdgeId id : graph.out_edges(v)) {
      const Edge& e = graph.edge(id);
      if (e.colour != colour) continue;
      Wide candidate = d + e.weight.units();
      if (!dist[e.target] || candidate < *dist[e.target]) {
        dist[e.target] = candidate;
        queue.emplace(candidate, e.target);
      }
    }
  }
  return dist;
}

DistanceMatrix colour_all_pairs(const ColouredEdgeGraph& graph, ColourId colour) {
  const std::uint32_t n = graph.vertex_count();
  DistanceMatrix dist(n);
  for (const Edge& e : graph.edges()) {
    if (e.colour != colour || e.source == e.target) continue;
    Wide w = e.weight.units();
    if (w < dist.at(e.source, e.target)) dist.at(e.source, e.target) = w;
  }
  for (VertexId via = 0; via < n; ++via) {
    for (VertexId x = 0; x < n; ++x) {
      Wide to_via = dist.at(x, via);
      if (to_via == kUnreachable) continue;
      for (VertexId y = 0; y < n; ++y) {
        Wide from_via = dist.at(via, y);
        if (from_via == kUnreachable) continue;
        if (to_via + from_via < dist.at(x, y)) dist.at(x, y) = to_via + from_via;
      }
    }
  }
  return dist;
}

std::vector<DistanceMatrix> all_colour_all_pairs(const ColouredEdgeGraph& graph,
                                                 int jobs) {
  const int k = static_cast<int>(graph.colour_count());
  std::vector<DistanceMatrix> result(static_cast<std::size_t>(k));
#pragma omp parallel for num_threads(resolve_jobs(jobs)) schedule(dynamic)
  for (int c = 0; c < k; ++c) {
    result[static_cast<std::size_t>(c)] =
        colour_all_pairs(graph, static_cast<ColourId>(c));
  }
  return result;
}

std::vector<DistanceMatrix> all_colour_all_pairs_serial(
    const ColouredEdgeGraph& graph) {
  std::vector<DistanceMatrix> result;
  result.reserve(graph.colour_count());
  for (ColourId c = 0; c < graph.colour_count(); ++c) {
    result.push_back(colour_all_pairs(graph, c));
  }
  return result;
}

int resolve_jobs(int requested) {
  return requested > 0 ? requested : omp_get_max_threads();
}

}  // namespace minpaths
