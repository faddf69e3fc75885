#include "rehub/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>

#include "rehub/error.hpp"
#include "rehub/online.hpp"

namespace rehub {

std::size_t scaled_count(double fraction, std::size_t n) {
  const double scaled = std::ceil(fraction * static_cast<double>(n) - 1e-9);
  if (scaled <= 0.0) return 0;
  return std::min(n, static_cast<std::size_t>(scaled));
}

namespace {

std::vector<Vertex> sample_without_replacement(std::vector<Vertex> pool, std::size_t count,
                                               std::mt19937_64& rng) {
  // Partial Fisher-Yates.
  for (std::size_t i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

void check_fraction(double value, const char* name) {
  if (!(value > 0.0 && value <= 1.0)) {
    throw ConfigError(std::string(name) + " must be in (0, 1]");
  }
}

}  // namespace

ObjectSet generate_random_objects(const Graph& g, double density, std::uint64_t seed) {
  check_fraction(density, "density");
  const std::size_t count = scaled_count(density, g.vertex_count());
  if (count < 2) throw ConfigError("density yields fewer than 2 objects");
  std::vector<Vertex> pool(g.vertex_count());
  std::iota(pool.begin(), pool.end(), Vertex{0});
  std::mt19937_64 rng(seed);
  return {sample_without_replacement(std::move(pool), count, rng), g.vertex_count()};
}

ObjectSet generate_ball_objects(const Graph& g, double density, double ball, std::uint64_t seed) {
  check_fraction(density, "density");
  check_fraction(ball, "ball fraction");
  const std::size_t n = g.vertex_count();
  const std::size_t count = scaled_count(density, n);
  const std::size_t ball_size = scaled_count(ball, n);
  if (count < 2) throw ConfigError("density yields fewer than 2 objects");
  if (ball_size < count) throw ConfigError("ball is smaller than the object set");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_root(0, n - 1);
  const auto root = static_cast<Vertex>(pick_root(rng));

  // Level-synchronous BFS; the level that crosses ball_size is truncated by ID.
  std::vector<bool> seen(n, false);
  std::vector<Vertex> members{root};
  std::vector<Vertex> frontier{root}, next;
  seen[root] = true;
  while (members.size() < ball_size && !frontier.empty()) {
    next.clear();
    for (Vertex v : frontier) {
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          next.push_back(w);
        }
      }
    }
    const std::size_t room = ball_size - members.size();
    if (next.size() > room) {
      std::sort(next.begin(), next.end());
      next.resize(room);
    }
    members.insert(members.end(), next.begin(), next.end());
    frontier.swap(next);
  }
  if (members.size() < ball_size) throw ConfigError("graph component smaller than the ball");

  return {sample_without_replacement(std::move(members), count, rng), n};
}

void SweepConfig::validate() const {
  if (densities.empty() || ks.empty() || balls.empty()) {
    throw ConfigError("sweep grid must not be empty");
  }
  for (double d : densities) check_fraction(d, "density");
  for (double b : balls) check_fraction(b, "ball fraction");
  for (std::size_t k : ks) {
    if (k == 0) throw ConfigError("k must be at least 1");
  }
  if (sets_per_point == 0 || queries_per_set == 0) {
    throw ConfigError("sets and queries per point must be positive");
  }
  if (threads < 1) throw ConfigError("thread count must be at least 1");
}

void write_sweep_csv_header(std::ostream& out) {
  out << "graph,density,k,ball,objects,sets,queries,knn_labels_ms,batch_knn_ms,"
         "rknn_labels_ms,offline_total_ms,online_mean_us,online_median_us,epsilon,"
         "epsilon_max,object_label_pairs,knn_label_pairs,rknn_label_pairs,"
         "mean_touched_pairs,model_knn_labels_bytes,model_knn_results_bytes,"
         "model_rknn_labels_bytes,model_online_bytes\n";
}

void write_sweep_csv_row(const SweepRecord& r, std::ostream& out) {
  out << r.graph_name << ',' << r.density << ',' << r.k << ',' << r.ball << ',' << r.objects
      << ',' << r.sets << ',' << r.queries << ',' << r.knn_labels_ms << ',' << r.batch_knn_ms
      << ',' << r.rknn_labels_ms << ',' << r.offline_total_ms << ',' << r.online_mean_us << ','
      << r.online_median_us << ',' << r.epsilon << ',' << r.epsilon_max << ','
      << r.object_label_pairs << ',' << r.knn_label_pairs << ',' << r.rknn_label_pairs << ','
      << r.mean_touched_pairs << ',' << r.model_knn_labels_bytes << ','
      << r.model_knn_results_bytes << ',' << r.model_rknn_labels_bytes << ','
      << r.model_online_bytes << '\n';
}

namespace {

using Clock = std::chrono::steady_clock;

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid),
                   values.end());
  if (values.size() % 2 == 1) return values[mid];
  const double upper = values[mid];
  const double lower =
      *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

}  // namespace

std::vector<SweepRecord> run_sweep(const Graph& g, const LabelSet& labels,
                                   const SweepConfig& config, std::ostream* csv,
                                   std::ostream* log) {
  config.validate();
  if (g.vertex_count() != labels.vertex_count()) {
    throw ConfigError("label set does not match the graph");
  }
  const std::size_t n = g.vertex_count();
  if (csv != nullptr) write_sweep_csv_header(*csv);

  std::vector<SweepRecord> records;
  std::uint64_t point = 0;
  for (double density : config.densities) {
    for (std::size_t k : config.ks) {
      for (double ball : config.balls) {
        ++point;
        const std::size_t count = scaled_count(density, n);
        if (count < k + 1 || scaled_count(ball, n) < count) {
          if (log != nullptr) {
            *log << "warning: skipping D=" << density << " k=" << k << " B=" << ball
                 << " (|P|=" << count << ")\n";
          }
          continue;
        }

        SweepRecord rec;
        rec.graph_name = config.graph_name;
        rec.density = density;
        rec.k = k;
        rec.ball = ball;
        rec.objects = count;
        rec.sets = config.sets_per_point;
        rec.queries = config.queries_per_set;

        std::vector<double> online_us;
        online_us.reserve(config.sets_per_point * config.queries_per_set);
        double touched = 0.0;
        for (std::size_t set = 0; set < config.sets_per_point; ++set) {
          std::seed_seq seq{config.seed, point, static_cast<std::uint64_t>(set)};
          std::mt19937_64 rng(seq);
          const std::uint64_t object_seed = rng();
          ObjectSet objects = ball >= 1.0
                                  ? generate_random_objects(g, density, object_seed)
                                  : generate_ball_objects(g, density, ball, object_seed);

          OfflineIndex index =
              offline_preprocess(labels, objects, k, OfflineOptions{config.threads});
          rec.knn_labels_ms += index.timings.knn_labels_ms;
          rec.batch_knn_ms += index.timings.batch_knn_ms;
          rec.rknn_labels_ms += index.timings.rknn_labels_ms;
          rec.offline_total_ms += index.timings.total_ms;
          rec.epsilon += index.epsilon();
          rec.epsilon_max = std::max(rec.epsilon_max, index.epsilon());
          rec.object_label_pairs += static_cast<double>(index.object_label_pairs);
          rec.knn_label_pairs += static_cast<double>(index.knn_labels.total_pairs());
          rec.rknn_label_pairs += static_cast<double>(index.rknn_labels.total_pairs());

          std::uniform_int_distribution<std::size_t> pick(0, n - 1);
          for (std::size_t q = 0; q < config.queries_per_set; ++q) {
            const auto vertex = static_cast<Vertex>(pick(rng));
            QueryCounters counters;
            const auto t0 = Clock::now();
            auto answer = rknn_query(index, labels, vertex, &counters);
            const auto t1 = Clock::now();
            online_us.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
            touched += static_cast<double>(counters.pairs_touched);
            if (answer.distances.size() != count) throw DataError("malformed RkNN answer");
          }
        }

        const auto sets = static_cast<double>(config.sets_per_point);
        rec.knn_labels_ms /= sets;
        rec.batch_knn_ms /= sets;
        rec.rknn_labels_ms /= sets;
        rec.offline_total_ms /= sets;
        rec.epsilon /= sets;
        rec.object_label_pairs /= sets;
        rec.knn_label_pairs /= sets;
        rec.rknn_label_pairs /= sets;
        rec.mean_touched_pairs = touched / static_cast<double>(online_us.size());
        rec.online_mean_us =
            std::accumulate(online_us.begin(), online_us.end(), 0.0) /
            static_cast<double>(online_us.size());
        rec.online_median_us = median(std::move(online_us));

        rec.model_knn_labels_bytes = 5.0 * static_cast<double>(k + 1) * static_cast<double>(n);
        rec.model_knn_results_bytes = 5.0 * static_cast<double>(k) * static_cast<double>(count);
        rec.model_rknn_labels_bytes = 5.0 * rec.rknn_label_pairs;
        rec.model_online_bytes = static_cast<double>(count);

        if (csv != nullptr) write_sweep_csv_row(rec, *csv);
        records.push_back(std::move(rec));
      }
    }
  }
  return records;
}

}  // namespace rehub
