#pragma once

#include <cstddef>
#include <cstdint>

#include "rehub/graph.hpp"

namespace rehub {

// Seeded synthetic graphs for tests and sweeps. Both are connected.

// Random spanning tree (each vertex attaches to a uniformly chosen earlier
// vertex) plus uniformly random extra edges until `edge_count` distinct
// edges exist or the graph is complete.
Graph random_connected_graph(std::size_t vertex_count, std::size_t edge_count,
                             std::uint64_t seed);

// Barabasi-Albert style preferential attachment: every new vertex links to
// `edges_per_vertex` distinct existing vertices chosen proportionally to
// degree.
Graph preferential_attachment_graph(std::size_t vertex_count, std::size_t edges_per_vertex,
                                    std::uint64_t seed);

}  // namespace rehub
