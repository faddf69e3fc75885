#include "rehub/online.hpp"

#include <string>

#include "rehub/bounded_buffer.hpp"
#include "rehub/error.hpp"

namespace rehub {

std::vector<ObjectPair> RknnAnswer::members() const {
  std::vector<ObjectPair> out;
  for (std::size_t i = 0; i < distances.size(); ++i) {
    if (distances[i] != kInfinity) out.push_back({static_cast<ObjectIndex>(i), distances[i]});
  }
  return out;
}

RknnAnswer rknn_query(const OfflineIndex& index, const LabelSet& labels, Vertex q,
                      QueryCounters* counters) {
  if (index.label_fingerprint != labels.fingerprint() ||
      index.rknn_labels.hub_count() != labels.vertex_count()) {
    throw DataError("offline index was built from a different label set");
  }
  if (q >= labels.vertex_count()) {
    throw RangeError("query vertex " + std::to_string(q) + " out of range");
  }

  RknnAnswer answer;
  answer.distances.assign(index.objects.size(), kInfinity);
  auto& out = answer.distances;
  QueryCounters local;
  for (const auto& e : labels.label(q)) {
    auto pairs = index.rknn_labels.pairs(e.hub);
    ++local.hubs_visited;
    local.pairs_touched += pairs.size();
    for (const auto& p : pairs) {
      const Distance d = Distance{e.dist} + p.dist;
      if (d < out[p.index] && d <= index.knn_results.worst_dist(p.index)) out[p.index] = d;
    }
  }
  if (counters != nullptr) *counters = local;
  return answer;
}

std::vector<ObjectPair> knn_query(const KnnBackwardLabels& knn_labels, const LabelSet& labels,
                                  Vertex q, std::size_t k) {
  if (knn_labels.hub_count() != labels.vertex_count()) {
    throw DataError("kNN backward labels were built from a different label set");
  }
  if (k == 0 || k + 1 > knn_labels.capacity()) {
    throw ConfigError("k must be in [1, " + std::to_string(knn_labels.capacity() - 1) + "]");
  }
  if (q >= labels.vertex_count()) {
    throw RangeError("query vertex " + std::to_string(q) + " out of range");
  }

  BoundedBuffer result(k);
  for (const auto& e : labels.label(q)) {
    if (e.dist > result.worst()) continue;
    for (const auto& p : knn_labels.pairs(e.hub)) {
      const Distance d = Distance{e.dist} + p.dist;
      if (d > result.worst()) break;
      result.push_unique({p.index, d});
    }
  }
  return {result.items().begin(), result.items().end()};
}

}  // namespace rehub
