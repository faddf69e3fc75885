#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "rehub/graph.hpp"
#include "rehub/types.hpp"

namespace rehub {

struct LabelEntry {
  Vertex hub = 0;
  std::uint8_t dist = 0;

  friend bool operator==(const LabelEntry&, const LabelEntry&) = default;
};

// 2-hop labels of an undirected graph: one hub-sorted array per vertex. The
// forward and backward labels coincide, so only one set is stored.
class LabelSet {
 public:
  LabelSet() = default;

  // Throws ConfigError when a label is not strictly sorted by hub or names a
  // hub outside [0, per_vertex.size()).
  explicit LabelSet(const std::vector<std::vector<LabelEntry>>& per_vertex);

  std::size_t vertex_count() const noexcept { return offsets_.size() - 1; }
  std::size_t total_pairs() const noexcept { return entries_.size(); }
  double average_label_size() const noexcept;

  std::span<const LabelEntry> label(Vertex v) const;

  // Content hash, computed once at construction. Used to tie an offline
  // index to the labels it was built from.
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  friend bool operator==(const LabelSet& a, const LabelSet& b) {
    return a.offsets_ == b.offsets_ && a.entries_ == b.entries_;
  }

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<LabelEntry> entries_;
  std::uint64_t fingerprint_ = 0;
};

/// Pruned Landmark Labeling. `g` must be connected. Throws DataError if a BFS
/// depth would exceed the 8-bit distance width.
LabelSet build_pll_labels(const Graph& g, const VertexOrdering& ordering);

/// Shortest distance via the hub-sorted label sweep; kInfinity without a
/// common hub.
Distance hl_distance(const LabelSet& labels, Vertex s, Vertex t);

// Binary format: "RHUB", u8 version, u64 vertex count, then per vertex a u32
// pair count and (u32 hub, u8 dist) pairs. All integers little-endian.
void save_labels(const LabelSet& labels, std::ostream& out);
LabelSet load_labels(std::istream& in);

void save_labels_file(const LabelSet& labels, const std::filesystem::path& path);
LabelSet load_labels_file(const std::filesystem::path& path);

}  // namespace rehub
