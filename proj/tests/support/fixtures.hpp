#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rehub/generators.hpp"
#include "rehub/graph.hpp"
#include "rehub/hub_labels.hpp"
#include "rehub/offline.hpp"

namespace rehub::testing {

// The 14-vertex tree of the worked example.
inline const char* kFigure1EdgeList =
    "0 1\n0 2\n0 3\n0 4\n1 5\n1 6\n1 7\n2 8\n3 9\n4 10\n5 11\n6 12\n7 13\n";

inline Graph figure1_graph() {
  std::istringstream in(kFigure1EdgeList);
  return parse_edge_list(in);
}

// Hub labels of the worked example, transcribed by hand.
inline std::vector<std::vector<LabelEntry>> figure1_expected_labels() {
  return {
      {{0, 0}},
      {{0, 1}, {1, 0}},
      {{0, 1}, {2, 0}},
      {{0, 1}, {3, 0}},
      {{0, 1}, {4, 0}},
      {{0, 2}, {1, 1}, {5, 0}},
      {{0, 2}, {1, 1}, {6, 0}},
      {{0, 2}, {1, 1}, {7, 0}},
      {{0, 2}, {2, 1}, {8, 0}},
      {{0, 2}, {3, 1}, {9, 0}},
      {{0, 2}, {4, 1}, {10, 0}},
      {{0, 3}, {1, 2}, {5, 1}, {11, 0}},
      {{0, 3}, {1, 2}, {6, 1}, {12, 0}},
      {{0, 3}, {1, 2}, {7, 1}, {13, 0}},
  };
}

inline LabelSet figure1_labels() {
  auto g = figure1_graph();
  return build_pll_labels(g, degree_ordering(g));
}

inline ObjectSet figure1_objects() { return ObjectSet({4, 10, 12}, 14); }

// Per-hub lists as (hub, pairs) for compact expectations.
inline std::vector<std::vector<ObjectPair>> hub_lists(const HubPairLists& lists) {
  std::vector<std::vector<ObjectPair>> out(lists.hub_count());
  for (Vertex h = 0; h < lists.hub_count(); ++h) {
    auto p = lists.pairs(h);
    out[h].assign(p.begin(), p.end());
  }
  return out;
}

// Mixed generator: even seeds give uniform random graphs, odd seeds give
// preferential attachment graphs.
inline Graph mixed_random_graph(std::size_t n, std::uint64_t seed) {
  if (seed % 2 == 0) return random_connected_graph(n, n * 2, seed);
  return preferential_attachment_graph(n, 2, seed);
}

inline ObjectSet random_objects(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::vector<Vertex> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Vertex>(i);
  std::mt19937_64 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(count);
  return ObjectSet(all, n);
}

inline std::vector<Distance> sorted_distances(const std::vector<ObjectPair>& pairs) {
  std::vector<Distance> d;
  for (const auto& p : pairs) d.push_back(p.dist);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace rehub::testing
