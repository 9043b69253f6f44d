#pragma once

#include <algorithm>
#include <cassert>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace capcover {

template <class Cost>
struct DagEdge {
  int from = 0;
  int to = 0;
  Cost cost{};
};

template <class Cost>
struct DagPath {
  Cost cost{};
  std::vector<DagEdge<Cost>> edges;  // in path order
};

// Minimum-cost path from vertex 0 to vertex num_vertices - 1 in a DAG whose
// edges all point from a lower to a strictly higher vertex index, so the
// index order is already topological. Linear in the number of edges.
template <class Cost>
std::optional<DagPath<Cost>> dag_shortest_path(int num_vertices,
                                               std::span<const DagEdge<Cost>> edges) {
  assert(num_vertices >= 1);
  std::vector<std::vector<int>> outgoing(num_vertices);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    assert(edges[e].from < edges[e].to && edges[e].to < num_vertices);
    outgoing[edges[e].from].push_back(e);
  }

  std::vector<std::optional<Cost>> dist(num_vertices);
  std::vector<int> via(num_vertices, -1);
  dist[0] = Cost{};
  for (int v = 0; v < num_vertices; ++v) {
    if (!dist[v]) continue;
    for (int e : outgoing[v]) {
      const auto& edge = edges[e];
      Cost through = *dist[v] + edge.cost;
      if (!dist[edge.to] || through < *dist[edge.to]) {
        dist[edge.to] = through;
        via[edge.to] = e;
      }
    }
  }

  const int target = num_vertices - 1;
  if (!dist[target]) return std::nullopt;

  DagPath<Cost> path;
  path.cost = *dist[target];
  for (int v = target; v != 0; v = edges[via[v]].from) path.edges.push_back(edges[via[v]]);
  std::reverse(path.edges.begin(), path.edges.end());
  return path;
}

}  // namespace capcover
