#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "rehub/hub_labels.hpp"
#include "rehub/types.hpp"

namespace rehub {

// Objects located at distinct vertices. Position i in this set is the object
// index used by every downstream structure.
class ObjectSet {
 public:
  ObjectSet() = default;

  // Throws ConfigError on duplicates, RangeError on IDs >= vertex_count.
  ObjectSet(std::vector<Vertex> vertices, std::size_t vertex_count);

  std::size_t size() const noexcept { return vertices_.size(); }
  Vertex operator[](ObjectIndex i) const noexcept { return vertices_[i]; }
  std::span<const Vertex> vertices() const noexcept { return vertices_; }

  friend bool operator==(const ObjectSet&, const ObjectSet&) = default;

 private:
  std::vector<Vertex> vertices_;
};

// Per-hub lists of (object index, distance) in CSR layout.
class HubPairLists {
 public:
  HubPairLists() = default;
  HubPairLists(std::vector<std::size_t> offsets, std::vector<ObjectPair> pairs);

  std::size_t hub_count() const noexcept { return offsets_.size() - 1; }
  std::size_t total_pairs() const noexcept { return pairs_.size(); }
  std::span<const ObjectPair> pairs(Vertex hub) const;

  friend bool operator==(const HubPairLists&, const HubPairLists&) = default;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<ObjectPair> pairs_;
};

// Per hub, the k+1 object pairs of smallest distance, ascending.
class KnnBackwardLabels : public HubPairLists {
 public:
  KnnBackwardLabels() = default;
  KnnBackwardLabels(HubPairLists lists, std::size_t capacity)
      : HubPairLists(std::move(lists)), capacity_(capacity) {}

  std::size_t capacity() const noexcept { return capacity_; }

  friend bool operator==(const KnnBackwardLabels&, const KnnBackwardLabels&) = default;

 private:
  std::size_t capacity_ = 0;
};

// Per hub, object pairs whose distance is within that object's k-th nearest
// object distance, in object-index order.
class RknnBackwardLabels : public HubPairLists {
 public:
  using HubPairLists::HubPairLists;
  RknnBackwardLabels() = default;
  explicit RknnBackwardLabels(HubPairLists lists) : HubPairLists(std::move(lists)) {}

  friend bool operator==(const RknnBackwardLabels&, const RknnBackwardLabels&) = default;
};

// Row i lists the k nearest other objects of object i, ascending.
class KnnResultTable {
 public:
  KnnResultTable() = default;
  KnnResultTable(std::size_t k, std::vector<ObjectPair> rows);

  std::size_t k() const noexcept { return k_; }
  std::size_t row_count() const noexcept { return k_ == 0 ? 0 : rows_.size() / k_; }
  std::span<const ObjectPair> row(ObjectIndex i) const;
  Distance worst_dist(ObjectIndex i) const { return row(i).back().dist; }

  friend bool operator==(const KnnResultTable&, const KnnResultTable&) = default;

 private:
  std::size_t k_ = 0;
  std::vector<ObjectPair> rows_;
};

struct OfflineTimings {
  double knn_labels_ms = 0.0;
  double batch_knn_ms = 0.0;
  double rknn_labels_ms = 0.0;
  double total_ms = 0.0;
};

struct OfflineOptions {
  int threads = 1;
};

struct OfflineIndex {
  std::size_t k = 0;
  ObjectSet objects;
  KnnBackwardLabels knn_labels;
  KnnResultTable knn_results;
  RknnBackwardLabels rknn_labels;
  std::uint64_t label_fingerprint = 0;
  // Sum of the objects' forward-label lengths (the unpruned one-to-many size).
  std::size_t object_label_pairs = 0;
  OfflineTimings timings;

  // RkNN backward label pairs over object label pairs.
  double epsilon() const noexcept;

  // Timings are excluded.
  friend bool operator==(const OfflineIndex& a, const OfflineIndex& b) {
    return a.k == b.k && a.objects == b.objects && a.knn_labels == b.knn_labels &&
           a.knn_results == b.knn_results && a.rknn_labels == b.rknn_labels &&
           a.label_fingerprint == b.label_fingerprint &&
           a.object_label_pairs == b.object_label_pairs;
  }
};

/// Throws ConfigError unless k >= 1 and |P| >= k + 1.
void check_offline_config(const ObjectSet& objects, std::size_t k);

std::size_t object_label_pairs(const LabelSet& labels, const ObjectSet& objects);

KnnBackwardLabels build_knn_backward_labels(const LabelSet& labels, const ObjectSet& objects,
                                            std::size_t k);

// Rows are independent and computed in parallel on `threads` workers; the
// output does not depend on the worker count.
KnnResultTable batch_knn(const LabelSet& labels, const ObjectSet& objects, std::size_t k,
                         const KnnBackwardLabels& knn_labels, int threads = 1);

RknnBackwardLabels build_rknn_backward_labels(const LabelSet& labels, const ObjectSet& objects,
                                              std::size_t k, const KnnResultTable& knn_results);

OfflineIndex offline_preprocess(const LabelSet& labels, const ObjectSet& objects, std::size_t k,
                                const OfflineOptions& options = {});

// Binary format: "RHIX", u8 version, u32 k, u32 |P|, |P| u32 object
// vertices, |P| * k (u32 index, u8 dist) kNN rows, then one section per
// vertex: u32 pair count and (u32 index, u8 dist) RkNN pairs.
void save_index(const OfflineIndex& index, std::ostream& out);

// The file does not carry the labels, so loading validates it against them:
// kNN rows must agree with label distances and the RkNN labels must equal
// the ones rebuilt from the labels. Any disagreement is a FormatError.
OfflineIndex load_index(std::istream& in, const LabelSet& labels);

void save_index_file(const OfflineIndex& index, const std::filesystem::path& path);
OfflineIndex load_index_file(const std::filesystem::path& path, const LabelSet& labels);

}  // namespace rehub
