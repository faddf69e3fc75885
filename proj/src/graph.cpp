#include "rehub/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "rehub/error.hpp"

namespace rehub {

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges,
                        std::vector<std::uint64_t> raw_ids) {
  if (vertex_count > std::numeric_limits<Vertex>::max()) {
    throw ConfigError("vertex count exceeds 32-bit vertex IDs");
  }
  if (raw_ids.empty()) {
    raw_ids.resize(vertex_count);
    std::iota(raw_ids.begin(), raw_ids.end(), std::uint64_t{0});
  } else if (raw_ids.size() != vertex_count) {
    throw ConfigError("raw ID table size does not match vertex count");
  }

  std::vector<std::size_t> degree(vertex_count, 0);
  for (auto [u, w] : edges) {
    if (u >= vertex_count || w >= vertex_count) {
      throw RangeError("edge endpoint out of range");
    }
    if (u == w) continue;
    ++degree[u];
    ++degree[w];
  }

  Graph g;
  g.offsets_.assign(vertex_count + 1, 0);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  }
  g.adjacency_.resize(g.offsets_.back());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, w] : edges) {
    if (u == w) continue;
    g.adjacency_[cursor[u]++] = w;
    g.adjacency_[cursor[w]++] = u;
  }

  // Sort and dedup each list, then compact.
  std::size_t write = 0;
  std::vector<std::size_t> offsets(vertex_count + 1, 0);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    auto first = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    for (auto it = first; it != last; ++it) g.adjacency_[write++] = *it;
    offsets[v + 1] = write;
  }
  g.adjacency_.resize(write);
  g.adjacency_.shrink_to_fit();
  g.offsets_ = std::move(offsets);

  g.raw_ids_ = std::move(raw_ids);
  g.raw_to_dense_.reserve(vertex_count);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (!g.raw_to_dense_.emplace(g.raw_ids_[v], static_cast<Vertex>(v)).second) {
      throw ConfigError("duplicate raw vertex ID " + std::to_string(g.raw_ids_[v]));
    }
  }
  return g;
}

double Graph::average_degree() const noexcept {
  if (vertex_count() == 0) return 0.0;
  return static_cast<double>(adjacency_.size()) / static_cast<double>(vertex_count());
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (v >= vertex_count()) throw RangeError("vertex " + std::to_string(v) + " out of range");
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::size_t Graph::degree(Vertex v) const { return neighbors(v).size(); }

std::uint64_t Graph::raw_id(Vertex v) const {
  if (v >= vertex_count()) throw RangeError("vertex " + std::to_string(v) + " out of range");
  return raw_ids_[v];
}

std::optional<Vertex> Graph::dense_id(std::uint64_t raw) const {
  auto it = raw_to_dense_.find(raw);
  if (it == raw_to_dense_.end()) return std::nullopt;
  return it->second;
}

VertexOrdering VertexOrdering::from_order(std::vector<Vertex> order) {
  VertexOrdering result;
  result.rank.assign(order.size(), std::numeric_limits<std::uint32_t>::max());
  for (std::size_t r = 0; r < order.size(); ++r) {
    Vertex v = order[r];
    if (v >= order.size() || result.rank[v] != std::numeric_limits<std::uint32_t>::max()) {
      throw ConfigError("vertex ordering is not a permutation");
    }
    result.rank[v] = static_cast<std::uint32_t>(r);
  }
  result.order = std::move(order);
  return result;
}

namespace {

bool is_comment_or_blank(std::string_view line) {
  auto pos = line.find_first_not_of(" \t\r");
  if (pos == std::string_view::npos) return true;
  return line[pos] == '#' || line[pos] == '%';
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::vector<std::uint64_t> raw_ids;
  std::unordered_map<std::uint64_t, Vertex> dense;
  std::vector<Edge> edges;

  auto intern = [&](std::uint64_t raw) {
    auto [it, inserted] = dense.emplace(raw, static_cast<Vertex>(raw_ids.size()));
    if (inserted) {
      if (raw_ids.size() >= std::numeric_limits<Vertex>::max()) {
        throw ConfigError("too many vertices for 32-bit vertex IDs");
      }
      raw_ids.push_back(raw);
    }
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;

    std::uint64_t ids[2];
    std::size_t tokens = 0;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (true) {
      while (p != end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
      if (p == end) break;
      if (tokens == 2) throw ParseError(line_no, "expected two vertex IDs, found more");
      std::uint64_t value = 0;
      auto [next, ec] = std::from_chars(p, end, value);
      if (ec != std::errc{} ||
          (next != end && *next != ' ' && *next != '\t' && *next != '\r')) {
        throw ParseError(line_no, "invalid vertex ID");
      }
      ids[tokens++] = value;
      p = next;
    }
    if (tokens != 2) throw ParseError(line_no, "expected two vertex IDs");

    Vertex u = intern(ids[0]);
    Vertex w = intern(ids[1]);
    if (u != w) edges.emplace_back(u, w);
  }
  if (raw_ids.empty()) throw ParseError(line_no, "empty graph");

  const std::size_t n = raw_ids.size();
  return Graph::from_edges(n, edges, std::move(raw_ids));
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open graph file " + path.string());
  return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  // Vertex v is introduced by the first edge to a smaller neighbor, or by a
  // self-loop line when it has none. Parsing replays first-appearance order.
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto nbrs = g.neighbors(v);
    if (nbrs.empty() || nbrs.front() > v) {
      out << g.raw_id(v) << ' ' << g.raw_id(v) << '\n';
    }
    for (Vertex w : nbrs) {
      if (w >= v) break;
      out << g.raw_id(w) << ' ' << g.raw_id(v) << '\n';
    }
  }
}

namespace {

// Component label per vertex, numbered in order of smallest member.
std::vector<std::uint32_t> component_labels(const Graph& g, std::uint32_t& count) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> comp(g.vertex_count(), kUnset);
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  count = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] != kUnset) continue;
    queue.clear();
    queue.push_back(s);
    comp[s] = count;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (comp[w] == kUnset) {
          comp[w] = count;
          queue.push_back(w);
        }
      }
    }
    ++count;
  }
  return comp;
}

}  // namespace

bool is_connected(const Graph& g) {
  std::uint32_t count = 0;
  component_labels(g, count);
  return count <= 1;
}

Graph largest_connected_component(const Graph& g) {
  std::uint32_t count = 0;
  auto comp = component_labels(g, count);
  if (count <= 1) return g;

  std::vector<std::size_t> sizes(count, 0);
  for (auto c : comp) ++sizes[c];
  // Components are numbered by smallest member, so the first maximum wins ties.
  auto best = static_cast<std::uint32_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

  constexpr auto kDropped = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> remap(g.vertex_count(), kDropped);
  std::vector<std::uint64_t> raw_ids;
  raw_ids.reserve(sizes[best]);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (comp[v] == best) {
      remap[v] = static_cast<Vertex>(raw_ids.size());
      raw_ids.push_back(g.raw_id(v));
    }
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (remap[v] == kDropped) continue;
    for (Vertex w : g.neighbors(v)) {
      if (w > v) edges.emplace_back(remap[v], remap[w]);
    }
  }
  const std::size_t n = raw_ids.size();
  return Graph::from_edges(n, edges, std::move(raw_ids));
}

VertexOrdering degree_ordering(const Graph& g) {
  std::vector<Vertex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return g.degree(a) > g.degree(b);
  });
  return VertexOrdering::from_order(std::move(order));
}

}  // namespace rehub
