#include "rehub/offline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <string>
#include <unordered_set>

#include <omp.h>

#include "binary_io.hpp"
#include "rehub/bounded_buffer.hpp"
#include "rehub/error.hpp"

namespace rehub {

namespace {

constexpr std::string_view kIndexMagic = "RHIX";
constexpr std::uint8_t kIndexVersion = 1;

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

}  // namespace

ObjectSet::ObjectSet(std::vector<Vertex> vertices, std::size_t vertex_count)
    : vertices_(std::move(vertices)) {
  if (vertices_.size() > std::numeric_limits<ObjectIndex>::max()) {
    throw ConfigError("too many objects");
  }
  std::unordered_set<Vertex> seen;
  seen.reserve(vertices_.size());
  for (Vertex v : vertices_) {
    if (v >= vertex_count) {
      throw RangeError("object vertex " + std::to_string(v) + " out of range");
    }
    if (!seen.insert(v).second) {
      throw ConfigError("duplicate object vertex " + std::to_string(v));
    }
  }
}

HubPairLists::HubPairLists(std::vector<std::size_t> offsets, std::vector<ObjectPair> pairs)
    : offsets_(std::move(offsets)), pairs_(std::move(pairs)) {
  if (offsets_.empty() || offsets_.front() != 0 || offsets_.back() != pairs_.size() ||
      !std::is_sorted(offsets_.begin(), offsets_.end())) {
    throw ConfigError("inconsistent hub list offsets");
  }
}

std::span<const ObjectPair> HubPairLists::pairs(Vertex hub) const {
  if (hub >= hub_count()) throw RangeError("hub " + std::to_string(hub) + " out of range");
  return {pairs_.data() + offsets_[hub], offsets_[hub + 1] - offsets_[hub]};
}

KnnResultTable::KnnResultTable(std::size_t k, std::vector<ObjectPair> rows)
    : k_(k), rows_(std::move(rows)) {
  if (k_ == 0 || rows_.size() % k_ != 0) throw ConfigError("kNN table is not |P| x k");
}

std::span<const ObjectPair> KnnResultTable::row(ObjectIndex i) const {
  if (i >= row_count()) throw RangeError("object index " + std::to_string(i) + " out of range");
  return {rows_.data() + std::size_t{i} * k_, k_};
}

double OfflineIndex::epsilon() const noexcept {
  if (object_label_pairs == 0) return 0.0;
  return static_cast<double>(rknn_labels.total_pairs()) /
         static_cast<double>(object_label_pairs);
}

void check_offline_config(const ObjectSet& objects, std::size_t k) {
  if (k == 0) throw ConfigError("k must be at least 1");
  if (k > std::numeric_limits<std::uint32_t>::max() - 1) throw ConfigError("k too large");
  if (objects.size() < k + 1) {
    throw ConfigError("need at least k+1 = " + std::to_string(k + 1) + " objects, have " +
                      std::to_string(objects.size()));
  }
}

std::size_t object_label_pairs(const LabelSet& labels, const ObjectSet& objects) {
  std::size_t total = 0;
  for (Vertex v : objects.vertices()) total += labels.label(v).size();
  return total;
}

KnnBackwardLabels build_knn_backward_labels(const LabelSet& labels, const ObjectSet& objects,
                                            std::size_t k) {
  check_offline_config(objects, k);
  const std::size_t capacity = k + 1;
  const std::size_t hubs = labels.vertex_count();

  // Objects are pushed in index order, so the strict comparison in push()
  // keeps the smaller index on distance ties.
  std::vector<BoundedBuffer> buffers(hubs, BoundedBuffer(0));
  std::vector<bool> touched(hubs, false);
  for (ObjectIndex i = 0; i < objects.size(); ++i) {
    for (const auto& e : labels.label(objects[i])) {
      if (!touched[e.hub]) {
        buffers[e.hub] = BoundedBuffer(capacity);
        touched[e.hub] = true;
      }
      auto& buf = buffers[e.hub];
      if (buf.full() && e.dist > buf.worst()) continue;
      buf.push({i, e.dist});
    }
  }

  std::vector<std::size_t> offsets(hubs + 1, 0);
  for (std::size_t h = 0; h < hubs; ++h) offsets[h + 1] = offsets[h] + buffers[h].size();
  std::vector<ObjectPair> pairs;
  pairs.reserve(offsets.back());
  for (const auto& buf : buffers) {
    auto items = buf.items();
    pairs.insert(pairs.end(), items.begin(), items.end());
  }
  return {HubPairLists(std::move(offsets), std::move(pairs)), capacity};
}

KnnResultTable batch_knn(const LabelSet& labels, const ObjectSet& objects, std::size_t k,
                         const KnnBackwardLabels& knn_labels, int threads) {
  check_offline_config(objects, k);
  if (knn_labels.capacity() != k + 1) {
    throw ConfigError("kNN backward labels were built for a different k");
  }
  if (knn_labels.hub_count() != labels.vertex_count()) {
    throw ConfigError("kNN backward labels do not match the label set");
  }
  if (threads < 1) throw ConfigError("thread count must be at least 1");

  const auto count = static_cast<std::int64_t>(objects.size());
  std::vector<ObjectPair> rows(objects.size() * k);
  std::atomic<std::int64_t> short_row{-1};

#pragma omp parallel num_threads(threads)
  {
    BoundedBuffer result(k);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t row = 0; row < count; ++row) {
      const auto self = static_cast<ObjectIndex>(row);
      result.clear();
      for (const auto& e : labels.label(objects[self])) {
        if (e.dist > result.worst()) continue;
        for (const auto& p : knn_labels.pairs(e.hub)) {
          if (p.index == self) continue;
          const Distance d = Distance{e.dist} + p.dist;
          // Lists are sorted by distance, nothing further can enter.
          if (d > result.worst()) break;
          result.push_unique({p.index, d});
        }
      }
      if (!result.full()) {
        std::int64_t expected = -1;
        short_row.compare_exchange_strong(expected, row);
        continue;
      }
      std::copy(result.items().begin(), result.items().end(),
                rows.begin() + static_cast<std::ptrdiff_t>(row * static_cast<std::int64_t>(k)));
    }
  }

  if (auto bad = short_row.load(); bad >= 0) {
    throw DataError("insufficient reachable objects for object index " + std::to_string(bad));
  }
  return {k, std::move(rows)};
}

RknnBackwardLabels build_rknn_backward_labels(const LabelSet& labels, const ObjectSet& objects,
                                              std::size_t k, const KnnResultTable& knn_results) {
  check_offline_config(objects, k);
  if (knn_results.k() != k || knn_results.row_count() != objects.size()) {
    throw ConfigError("kNN results do not match the object set and k");
  }
  const std::size_t hubs = labels.vertex_count();

  std::vector<std::size_t> offsets(hubs + 1, 0);
  for (ObjectIndex i = 0; i < objects.size(); ++i) {
    const Distance bound = knn_results.worst_dist(i);
    for (const auto& e : labels.label(objects[i])) {
      if (e.dist <= bound) ++offsets[e.hub + 1];
    }
  }
  for (std::size_t h = 0; h < hubs; ++h) offsets[h + 1] += offsets[h];

  std::vector<ObjectPair> pairs(offsets.back());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (ObjectIndex i = 0; i < objects.size(); ++i) {
    const Distance bound = knn_results.worst_dist(i);
    for (const auto& e : labels.label(objects[i])) {
      if (e.dist <= bound) pairs[cursor[e.hub]++] = {i, e.dist};
    }
  }
  return RknnBackwardLabels(HubPairLists(std::move(offsets), std::move(pairs)));
}

OfflineIndex offline_preprocess(const LabelSet& labels, const ObjectSet& objects, std::size_t k,
                                const OfflineOptions& options) {
  check_offline_config(objects, k);
  OfflineIndex index;
  index.k = k;
  index.objects = objects;
  index.label_fingerprint = labels.fingerprint();
  index.object_label_pairs = object_label_pairs(labels, objects);

  const auto start = Clock::now();
  auto t = start;
  index.knn_labels = build_knn_backward_labels(labels, objects, k);
  index.timings.knn_labels_ms = elapsed_ms(t);

  t = Clock::now();
  index.knn_results = batch_knn(labels, objects, k, index.knn_labels, options.threads);
  index.timings.batch_knn_ms = elapsed_ms(t);

  t = Clock::now();
  index.rknn_labels = build_rknn_backward_labels(labels, objects, k, index.knn_results);
  index.timings.rknn_labels_ms = elapsed_ms(t);

  index.timings.total_ms = elapsed_ms(start);
  return index;
}

namespace {

void put_pair(std::ostream& out, const ObjectPair& p) {
  if (p.dist > kMaxStoredDistance) {
    throw FormatError("index file: distance " + std::to_string(p.dist) +
                      " exceeds the 8-bit width");
  }
  detail::put_le<std::uint32_t>(out, p.index);
  detail::put_u8(out, static_cast<std::uint8_t>(p.dist));
}

ObjectPair get_pair(detail::Reader& r) {
  ObjectPair p;
  p.index = r.le<std::uint32_t>();
  p.dist = r.u8();
  return p;
}

}  // namespace

void save_index(const OfflineIndex& index, std::ostream& out) {
  detail::put_magic(out, kIndexMagic);
  detail::put_u8(out, kIndexVersion);
  detail::put_le<std::uint32_t>(out, static_cast<std::uint32_t>(index.k));
  detail::put_le<std::uint32_t>(out, static_cast<std::uint32_t>(index.objects.size()));
  for (Vertex v : index.objects.vertices()) detail::put_le<std::uint32_t>(out, v);
  for (ObjectIndex i = 0; i < index.knn_results.row_count(); ++i) {
    for (const auto& p : index.knn_results.row(i)) put_pair(out, p);
  }
  for (Vertex h = 0; h < index.rknn_labels.hub_count(); ++h) {
    auto pairs = index.rknn_labels.pairs(h);
    detail::put_le<std::uint32_t>(out, static_cast<std::uint32_t>(pairs.size()));
    for (const auto& p : pairs) put_pair(out, p);
  }
  if (!out) throw FormatError("index file: write failed");
}

OfflineIndex load_index(std::istream& in, const LabelSet& labels) {
  detail::Reader r(in, "index file");
  r.expect_magic(kIndexMagic);
  if (auto version = r.u8(); version != kIndexVersion) {
    r.fail("unsupported version " + std::to_string(version));
  }
  const std::size_t k = r.le<std::uint32_t>();
  const std::size_t count = r.le<std::uint32_t>();
  if (k == 0 || count < k + 1) r.fail("invalid k / object count");
  if (count > labels.vertex_count()) r.fail("more objects than label vertices");

  std::vector<Vertex> vertices(count);
  for (auto& v : vertices) v = r.le<std::uint32_t>();
  ObjectSet objects;
  try {
    objects = ObjectSet(std::move(vertices), labels.vertex_count());
  } catch (const Error& e) {
    r.fail(std::string("object set does not match labels: ") + e.what());
  }

  std::vector<ObjectPair> rows(count * k);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      auto p = get_pair(r);
      if (p.index >= count || p.index == i) r.fail("invalid kNN row " + std::to_string(i));
      if (j > 0 && !precedes(rows[i * k + j - 1], p)) {
        r.fail("kNN row " + std::to_string(i) + " is not sorted");
      }
      for (std::size_t m = 0; m < j; ++m) {
        if (rows[i * k + m].index == p.index) r.fail("duplicate index in kNN row");
      }
      // Every stored distance must be the label distance between the objects.
      if (hl_distance(labels, objects[static_cast<ObjectIndex>(i)], objects[p.index]) != p.dist) {
        r.fail("kNN row " + std::to_string(i) + " disagrees with the label set");
      }
      rows[i * k + j] = p;
    }
  }

  std::vector<std::size_t> offsets(labels.vertex_count() + 1, 0);
  std::vector<ObjectPair> pairs;
  for (std::size_t h = 0; h < labels.vertex_count(); ++h) {
    const auto n = r.le<std::uint32_t>();
    if (n > count) r.fail("RkNN hub section longer than object count");
    for (std::uint32_t j = 0; j < n; ++j) pairs.push_back(get_pair(r));
    offsets[h + 1] = pairs.size();
  }
  r.expect_end();

  OfflineIndex index;
  index.k = k;
  index.objects = std::move(objects);
  index.knn_results = KnnResultTable(k, std::move(rows));
  index.knn_labels = build_knn_backward_labels(labels, index.objects, k);
  index.rknn_labels = build_rknn_backward_labels(labels, index.objects, k, index.knn_results);
  if (!(index.rknn_labels == RknnBackwardLabels(std::move(offsets), std::move(pairs)))) {
    r.fail("RkNN backward labels disagree with the label set");
  }
  index.label_fingerprint = labels.fingerprint();
  index.object_label_pairs = object_label_pairs(labels, index.objects);
  return index;
}

void save_index_file(const OfflineIndex& index, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot create index file " + path.string());
  save_index(index, out);
}

OfflineIndex load_index_file(const std::filesystem::path& path, const LabelSet& labels) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open index file " + path.string());
  return load_index(in, labels);
}

}  // namespace rehub
