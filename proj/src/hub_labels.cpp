#include "rehub/hub_labels.hpp"

#include <algorithm>
#include <fstream>
#include <string>

#include "binary_io.hpp"
#include "rehub/error.hpp"

namespace rehub {

namespace {

constexpr std::string_view kLabelMagic = "RHUB";
constexpr std::uint8_t kLabelVersion = 1;

// FNV-1a over vertex count and all entries.
std::uint64_t hash_labels(std::span<const std::size_t> offsets,
                          std::span<const LabelEntry> entries) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xFF;
      h *= 1099511628211ULL;
    }
  };
  mix(offsets.size());
  for (std::size_t o : offsets) mix(o);
  for (const auto& e : entries) mix((static_cast<std::uint64_t>(e.hub) << 8) | e.dist);
  return h;
}

}  // namespace

LabelSet::LabelSet(const std::vector<std::vector<LabelEntry>>& per_vertex) {
  const std::size_t n = per_vertex.size();
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + per_vertex[v].size();
  entries_.reserve(offsets_.back());
  for (std::size_t v = 0; v < n; ++v) {
    const auto& label = per_vertex[v];
    for (std::size_t j = 0; j < label.size(); ++j) {
      if (label[j].hub >= n) {
        throw ConfigError("label of vertex " + std::to_string(v) + " names hub out of range");
      }
      if (j > 0 && label[j - 1].hub >= label[j].hub) {
        throw ConfigError("label of vertex " + std::to_string(v) + " is not sorted by hub");
      }
    }
    entries_.insert(entries_.end(), label.begin(), label.end());
  }
  fingerprint_ = hash_labels(offsets_, entries_);
}

double LabelSet::average_label_size() const noexcept {
  if (vertex_count() == 0) return 0.0;
  return static_cast<double>(total_pairs()) / static_cast<double>(vertex_count());
}

std::span<const LabelEntry> LabelSet::label(Vertex v) const {
  if (v >= vertex_count()) throw RangeError("vertex " + std::to_string(v) + " out of range");
  return {entries_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

LabelSet build_pll_labels(const Graph& g, const VertexOrdering& ordering) {
  const std::size_t n = g.vertex_count();
  if (ordering.size() != n) throw ConfigError("ordering size does not match graph");

  std::vector<std::vector<LabelEntry>> labels(n);
  std::vector<Distance> root_dist(n, kInfinity);  // indexed by hub
  std::vector<Distance> depth(n, kInfinity);
  std::vector<Vertex> queue;
  queue.reserve(n);

  for (Vertex root : ordering.order) {
    for (const auto& e : labels[root]) root_dist[e.hub] = e.dist;

    queue.clear();
    queue.push_back(root);
    depth[root] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      const Distance d = depth[v];

      bool covered = false;
      for (const auto& e : labels[v]) {
        if (root_dist[e.hub] != kInfinity && root_dist[e.hub] + e.dist <= d) {
          covered = true;
          break;
        }
      }
      if (covered) continue;

      if (d > kMaxStoredDistance) {
        throw DataError("BFS depth " + std::to_string(d) + " from landmark " +
                        std::to_string(root) + " exceeds the 8-bit distance width");
      }
      labels[v].push_back({root, static_cast<std::uint8_t>(d)});
      for (Vertex w : g.neighbors(v)) {
        if (depth[w] == kInfinity) {
          depth[w] = d + 1;
          queue.push_back(w);
        }
      }
    }

    for (Vertex v : queue) depth[v] = kInfinity;
    for (const auto& e : labels[root]) root_dist[e.hub] = kInfinity;
  }

  for (auto& label : labels) {
    std::sort(label.begin(), label.end(),
              [](const LabelEntry& a, const LabelEntry& b) { return a.hub < b.hub; });
  }
  return LabelSet(labels);
}

Distance hl_distance(const LabelSet& labels, Vertex s, Vertex t) {
  auto a = labels.label(s);
  auto b = labels.label(t);
  Distance best = kInfinity;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].hub < b[j].hub) {
      ++i;
    } else if (a[i].hub > b[j].hub) {
      ++j;
    } else {
      best = std::min<Distance>(best, Distance{a[i].dist} + b[j].dist);
      ++i;
      ++j;
    }
  }
  return best;
}

void save_labels(const LabelSet& labels, std::ostream& out) {
  detail::put_magic(out, kLabelMagic);
  detail::put_u8(out, kLabelVersion);
  detail::put_le<std::uint64_t>(out, labels.vertex_count());
  for (Vertex v = 0; v < labels.vertex_count(); ++v) {
    auto label = labels.label(v);
    detail::put_le<std::uint32_t>(out, static_cast<std::uint32_t>(label.size()));
    for (const auto& e : label) {
      detail::put_le<std::uint32_t>(out, e.hub);
      detail::put_u8(out, e.dist);
    }
  }
  if (!out) throw FormatError("label file: write failed");
}

LabelSet load_labels(std::istream& in) {
  detail::Reader r(in, "label file");
  r.expect_magic(kLabelMagic);
  if (auto version = r.u8(); version != kLabelVersion) {
    r.fail("unsupported version " + std::to_string(version));
  }
  const auto n = r.le<std::uint64_t>();
  if (n > std::numeric_limits<Vertex>::max()) r.fail("vertex count too large");

  std::vector<std::vector<LabelEntry>> per_vertex(n);
  for (std::uint64_t v = 0; v < n; ++v) {
    const auto count = r.le<std::uint32_t>();
    if (count > n) r.fail("label of vertex " + std::to_string(v) + " longer than vertex count");
    auto& label = per_vertex[v];
    label.reserve(count);
    for (std::uint32_t j = 0; j < count; ++j) {
      LabelEntry e;
      e.hub = r.le<std::uint32_t>();
      e.dist = r.u8();
      if (e.hub >= n) r.fail("hub out of range at vertex " + std::to_string(v));
      if (!label.empty() && label.back().hub >= e.hub) {
        r.fail("unsorted label at vertex " + std::to_string(v));
      }
      label.push_back(e);
    }
  }
  r.expect_end();
  return LabelSet(per_vertex);
}

void save_labels_file(const LabelSet& labels, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot create label file " + path.string());
  save_labels(labels, out);
}

LabelSet load_labels_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open label file " + path.string());
  return load_labels(in);
}

}  // namespace rehub
