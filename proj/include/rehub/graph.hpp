#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rehub/types.hpp"

namespace rehub {

using Edge = std::pair<Vertex, Vertex>;

// Undirected, unweighted graph in CSR form. Neighbor lists are sorted, free
// of self-loops and duplicates, and symmetric. Each dense vertex keeps the raw
// identifier it had in the input file.
class Graph {
 public:
  Graph() = default;

  // Builds a graph over `vertex_count` dense vertices. Self-loops and
  // duplicate edges are dropped. `raw_ids` defaults to the identity mapping.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges,
                          std::vector<std::uint64_t> raw_ids = {});

  std::size_t vertex_count() const noexcept { return raw_ids_.size(); }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }
  double average_degree() const noexcept;

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const;

  std::uint64_t raw_id(Vertex v) const;
  std::span<const std::uint64_t> raw_ids() const noexcept { return raw_ids_; }
  std::optional<Vertex> dense_id(std::uint64_t raw) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.adjacency_ == b.adjacency_ &&
           a.raw_ids_ == b.raw_ids_;
  }

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
  std::vector<std::uint64_t> raw_ids_;
  std::unordered_map<std::uint64_t, Vertex> raw_to_dense_;
};

// Label-construction priority. order[r] is the vertex processed r-th and
// rank[v] is the inverse permutation.
struct VertexOrdering {
  std::vector<Vertex> order;
  std::vector<std::uint32_t> rank;

  // Throws ConfigError unless `order` is a permutation of [0, order.size()).
  static VertexOrdering from_order(std::vector<Vertex> order);

  std::size_t size() const noexcept { return order.size(); }
};

// Reads a whitespace separated edge list. Lines starting with '#' or '%' are
// comments; blank lines are skipped. Raw identifiers are remapped to dense
// IDs in order of first appearance.
Graph parse_edge_list(std::istream& in);
Graph read_edge_list_file(const std::filesystem::path& path);

// Writes raw IDs in an order that makes parse_edge_list reproduce `g`
// exactly, including vertex numbering and isolated vertices.
void write_edge_list(const Graph& g, std::ostream& out);

bool is_connected(const Graph& g);

// Induced subgraph on the largest connected component. Ties go to the
// component holding the smallest dense ID. Relative vertex order and raw IDs
// are preserved.
Graph largest_connected_component(const Graph& g);

// Degree descending, ties by ascending vertex ID.
VertexOrdering degree_ordering(const Graph& g);

}  // namespace rehub
