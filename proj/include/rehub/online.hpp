#pragma once

#include <cstddef>
#include <vector>

#include "rehub/hub_labels.hpp"
#include "rehub/offline.hpp"
#include "rehub/types.hpp"

namespace rehub {

// Distances from the query vertex to every object; kInfinity marks objects
// outside the reverse k-nearest-neighbor set.
struct RknnAnswer {
  std::vector<Distance> distances;

  bool contains(ObjectIndex i) const { return distances.at(i) != kInfinity; }

  // Members in object-index order.
  std::vector<ObjectPair> members() const;
};

struct QueryCounters {
  std::size_t hubs_visited = 0;
  std::size_t pairs_touched = 0;
};

// One-to-many sweep of q's label over the RkNN backward labels. An object
// is a member when its distance to q is <= its k-th nearest object distance.
// Throws RangeError for an invalid q and DataError when `index` was built
// from different labels.
RknnAnswer rknn_query(const OfflineIndex& index, const LabelSet& labels, Vertex q,
                      QueryCounters* counters = nullptr);

// The k nearest objects to q (ascending), using the kNN backward labels.
// Requires 1 <= k <= knn_labels.capacity() - 1.
std::vector<ObjectPair> knn_query(const KnnBackwardLabels& knn_labels, const LabelSet& labels,
                                  Vertex q, std::size_t k);

}  // namespace rehub
