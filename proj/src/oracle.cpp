#include "rehub/oracle.hpp"

#include <algorithm>
#include <string>

#include "rehub/error.hpp"

namespace rehub {

DistanceRow bfs_distances(const Graph& g, Vertex source) {
  if (source >= g.vertex_count()) {
    throw RangeError("source " + std::to_string(source) + " out of range");
  }
  DistanceRow row{source, std::vector<Distance>(g.vertex_count(), kInfinity)};
  std::vector<Vertex> queue{source};
  row.dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (row.dist[w] == kInfinity) {
        row.dist[w] = row.dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return row;
}

ObjectDistanceTable::ObjectDistanceTable(const Graph& g, const ObjectSet& objects)
    : objects_(objects) {
  rows_.reserve(objects.size());
  for (Vertex v : objects.vertices()) rows_.push_back(bfs_distances(g, v));
}

Distance ObjectDistanceTable::object_dist(ObjectIndex i, ObjectIndex j) const {
  return dist(i, objects_[j]);
}

std::vector<ObjectPair> oracle_knn(const ObjectDistanceTable& table, ObjectIndex i,
                                   std::size_t k) {
  std::vector<ObjectPair> all;
  for (ObjectIndex j = 0; j < table.object_count(); ++j) {
    if (j != i) all.push_back({j, table.object_dist(i, j)});
  }
  std::sort(all.begin(), all.end(), precedes);
  if (all.size() > k) all.resize(k);
  return all;
}

std::vector<ObjectPair> oracle_knn(const Graph& g, const ObjectSet& objects, ObjectIndex i,
                                   std::size_t k) {
  return oracle_knn(ObjectDistanceTable(g, objects), i, k);
}

Distance ObjectDistanceTable::kth_threshold(ObjectIndex i, std::size_t k) const {
  auto row = oracle_knn(*this, i, k);
  if (k == 0 || row.size() < k) return kInfinity;
  return row.back().dist;
}

std::vector<ObjectPair> oracle_rknn(const ObjectDistanceTable& table, Vertex q, std::size_t k) {
  std::vector<ObjectPair> members;
  for (ObjectIndex i = 0; i < table.object_count(); ++i) {
    const Distance d = table.dist(i, q);
    if (d != kInfinity && d <= table.kth_threshold(i, k)) members.push_back({i, d});
  }
  return members;
}

std::vector<ObjectPair> oracle_rknn(const Graph& g, const ObjectSet& objects, Vertex q,
                                    std::size_t k) {
  return oracle_rknn(ObjectDistanceTable(g, objects), q, k);
}

std::vector<ObjectPair> oracle_rknn_direct(const ObjectDistanceTable& table, Vertex q,
                                           std::size_t k) {
  std::vector<ObjectPair> members;
  for (ObjectIndex i = 0; i < table.object_count(); ++i) {
    const Distance d = table.dist(i, q);
    if (d == kInfinity) continue;
    std::size_t closer = 0;
    for (ObjectIndex j = 0; j < table.object_count(); ++j) {
      if (j != i && table.object_dist(i, j) < d) ++closer;
    }
    if (closer < k) members.push_back({i, d});
  }
  return members;
}

}  // namespace rehub
