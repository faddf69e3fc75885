#pragma once

#include <cstddef>
#include <vector>

#include "rehub/graph.hpp"
#include "rehub/offline.hpp"
#include "rehub/types.hpp"

namespace rehub {

// Brute-force BFS ground truth. Slow on purpose: O(|P| * |E|) per query.

struct DistanceRow {
  Vertex source = 0;
  std::vector<Distance> dist;  // kInfinity when unreachable
};

DistanceRow bfs_distances(const Graph& g, Vertex source);

// BFS rows from every object, reused across many oracle queries.
class ObjectDistanceTable {
 public:
  ObjectDistanceTable(const Graph& g, const ObjectSet& objects);

  std::size_t object_count() const noexcept { return rows_.size(); }
  Distance dist(ObjectIndex i, Vertex v) const { return rows_.at(i).dist.at(v); }
  Distance object_dist(ObjectIndex i, ObjectIndex j) const;

  // Distance to the k-th nearest other object; kInfinity if fewer exist.
  Distance kth_threshold(ObjectIndex i, std::size_t k) const;

 private:
  ObjectSet objects_;
  std::vector<DistanceRow> rows_;
};

// The k nearest other objects of object i, ascending by distance, ties by
// object index.
std::vector<ObjectPair> oracle_knn(const ObjectDistanceTable& table, ObjectIndex i, std::size_t k);
std::vector<ObjectPair> oracle_knn(const Graph& g, const ObjectSet& objects, ObjectIndex i,
                                   std::size_t k);

// {p in P : dist(p, q) <= dist(p, p_k)} in object-index order, computed from
// per-object k-th neighbor thresholds.
std::vector<ObjectPair> oracle_rknn(const ObjectDistanceTable& table, Vertex q, std::size_t k);
std::vector<ObjectPair> oracle_rknn(const Graph& g, const ObjectSet& objects, Vertex q,
                                    std::size_t k);

// Same set from the counting form of the definition: p is a member when
// fewer than k other objects are strictly closer to p than q is.
std::vector<ObjectPair> oracle_rknn_direct(const ObjectDistanceTable& table, Vertex q,
                                           std::size_t k);

}  // namespace rehub
