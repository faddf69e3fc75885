#include "rehub/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "rehub/error.hpp"

namespace rehub {

Graph random_connected_graph(std::size_t vertex_count, std::size_t edge_count,
                             std::uint64_t seed) {
  if (vertex_count == 0) throw ConfigError("graph needs at least one vertex");
  std::mt19937_64 rng(seed);
  std::set<Edge> edges;
  for (std::size_t v = 1; v < vertex_count; ++v) {
    std::uniform_int_distribution<std::size_t> parent(0, v - 1);
    edges.emplace(static_cast<Vertex>(parent(rng)), static_cast<Vertex>(v));
  }
  const std::size_t max_edges = vertex_count * (vertex_count - 1) / 2;
  const std::size_t target = std::min(edge_count, max_edges);
  std::uniform_int_distribution<std::size_t> pick(0, vertex_count - 1);
  while (edges.size() < target) {
    auto a = static_cast<Vertex>(pick(rng));
    auto b = static_cast<Vertex>(pick(rng));
    if (a == b) continue;
    edges.emplace(std::min(a, b), std::max(a, b));
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::from_edges(vertex_count, list);
}

Graph preferential_attachment_graph(std::size_t vertex_count, std::size_t edges_per_vertex,
                                    std::uint64_t seed) {
  if (vertex_count == 0) throw ConfigError("graph needs at least one vertex");
  if (edges_per_vertex == 0) throw ConfigError("edges per vertex must be positive");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  // Each endpoint occurrence is one ticket, so sampling is degree-proportional.
  std::vector<Vertex> tickets;

  const std::size_t core = std::min(vertex_count, edges_per_vertex + 1);
  for (std::size_t v = 1; v < core; ++v) {
    for (std::size_t u = 0; u < v; ++u) {
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      tickets.push_back(static_cast<Vertex>(u));
      tickets.push_back(static_cast<Vertex>(v));
    }
  }
  std::vector<Vertex> chosen;
  for (std::size_t v = core; v < vertex_count; ++v) {
    chosen.clear();
    std::uniform_int_distribution<std::size_t> pick(0, tickets.size() - 1);
    while (chosen.size() < edges_per_vertex) {
      Vertex u = tickets[pick(rng)];
      if (std::find(chosen.begin(), chosen.end(), u) == chosen.end()) chosen.push_back(u);
    }
    for (Vertex u : chosen) {
      edges.emplace_back(u, static_cast<Vertex>(v));
      tickets.push_back(u);
      tickets.push_back(static_cast<Vertex>(v));
    }
  }
  return Graph::from_edges(vertex_count, edges);
}

}  // namespace rehub
