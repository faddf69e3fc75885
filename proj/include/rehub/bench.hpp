#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rehub/graph.hpp"
#include "rehub/hub_labels.hpp"
#include "rehub/offline.hpp"

namespace rehub {

// ceil(fraction * n), guarded against floating point round-up.
std::size_t scaled_count(double fraction, std::size_t n);

// Uniform sample without replacement of ceil(density * |V|) vertices,
// deterministic for a seed. Object order is ascending vertex ID.
ObjectSet generate_random_objects(const Graph& g, double density, std::uint64_t seed);

// BFS ball of ceil(ball * |V|) vertices around a random root (the last BFS
// level is truncated by ascending vertex ID), then a uniform subset of
// ceil(density * |V|) of it.
ObjectSet generate_ball_objects(const Graph& g, double density, double ball, std::uint64_t seed);

struct SweepConfig {
  std::string graph_name = "graph";
  std::vector<double> densities{0.001, 0.01, 0.1};
  std::vector<std::size_t> ks{1, 2, 4, 8, 16, 32};
  std::vector<double> balls{1.0};  // 1.0 means uniformly distributed objects
  std::size_t sets_per_point = 100;
  std::size_t queries_per_set = 100;
  std::uint64_t seed = 1;
  int threads = 1;

  // Throws ConfigError when a field is outside its domain.
  void validate() const;
};

// Aggregates for one (density, k, ball) grid point, averaged over the
// object sets. Byte columns follow the 5-bytes-per-pair memory model.
struct SweepRecord {
  std::string graph_name;
  double density = 0.0;
  std::size_t k = 0;
  double ball = 1.0;
  std::size_t objects = 0;
  std::size_t sets = 0;
  std::size_t queries = 0;
  double knn_labels_ms = 0.0;
  double batch_knn_ms = 0.0;
  double rknn_labels_ms = 0.0;
  double offline_total_ms = 0.0;
  double online_mean_us = 0.0;
  double online_median_us = 0.0;
  double epsilon = 0.0;
  double epsilon_max = 0.0;
  double object_label_pairs = 0.0;
  double knn_label_pairs = 0.0;
  double rknn_label_pairs = 0.0;
  double mean_touched_pairs = 0.0;
  double model_knn_labels_bytes = 0.0;
  double model_knn_results_bytes = 0.0;
  double model_rknn_labels_bytes = 0.0;
  double model_online_bytes = 0.0;
};

void write_sweep_csv_header(std::ostream& out);
void write_sweep_csv_row(const SweepRecord& record, std::ostream& out);

// Runs the grid in order densities x ks x balls. Infeasible points
// (|P| < k + 1, ball smaller than the object set) are skipped with a warning
// on `log`. When `csv` is set, the header and one row per record are written.
std::vector<SweepRecord> run_sweep(const Graph& g, const LabelSet& labels,
                                   const SweepConfig& config, std::ostream* csv,
                                   std::ostream* log);

}  // namespace rehub
