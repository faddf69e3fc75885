#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "rehub/bench.hpp"
#include "rehub/error.hpp"
#include "rehub/oracle.hpp"
#include "support/fixtures.hpp"

using namespace rehub;

TEST(ScaledCount, CeilingWithoutRoundUp) {
  EXPECT_EQ(scaled_count(0.1, 1000), 100u);
  EXPECT_EQ(scaled_count(0.01, 4096), 41u);
  EXPECT_EQ(scaled_count(1.0, 14), 14u);
  EXPECT_EQ(scaled_count(0.3, 10), 3u);
}

TEST(RandomObjects, FullDensityTakesEveryVertex) {
  auto g = rehub::testing::figure1_graph();
  auto objects = generate_random_objects(g, 1.0, 3);
  ASSERT_EQ(objects.size(), 14u);
  for (Vertex v = 0; v < 14; ++v) EXPECT_EQ(objects[v], v);
}

TEST(RandomObjects, DeterministicPerSeed) {
  auto g = rehub::testing::mixed_random_graph(500, 1);
  EXPECT_EQ(generate_random_objects(g, 0.05, 42), generate_random_objects(g, 0.05, 42));
  EXPECT_NE(generate_random_objects(g, 0.05, 42), generate_random_objects(g, 0.05, 43));
}

TEST(RandomObjects, SizesAreExactCeilings) {
  auto g = rehub::testing::mixed_random_graph(777, 2);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> density(0.003, 1.0);
  for (int draw = 0; draw < 1000; ++draw) {
    const double d = density(rng);
    const auto expected = static_cast<std::size_t>(std::ceil(d * 777.0));
    auto objects = generate_random_objects(g, d, static_cast<std::uint64_t>(draw));
    ASSERT_EQ(objects.size(), expected) << d;
  }
}

TEST(RandomObjects, Errors) {
  auto g = rehub::testing::figure1_graph();
  EXPECT_THROW(generate_random_objects(g, 0.0, 1), ConfigError);
  EXPECT_THROW(generate_random_objects(g, 1.5, 1), ConfigError);
  EXPECT_THROW(generate_random_objects(g, 0.05, 1), ConfigError);  // one object
}

TEST(BallObjects, WholeGraphBall) {
  auto g = rehub::testing::mixed_random_graph(300, 4);
  auto objects = generate_ball_objects(g, 0.1, 1.0, 9);
  EXPECT_EQ(objects.size(), 30u);
}

TEST(BallObjects, BallEqualToDensityIsTheBall) {
  auto g = rehub::testing::mixed_random_graph(300, 5);
  auto objects = generate_ball_objects(g, 0.1, 0.1, 9);
  ASSERT_EQ(objects.size(), 30u);
  // The ball is BFS-closed except for the truncated last level: at most one
  // distance value from the root is partially included.
  std::set<Vertex> ball(objects.vertices().begin(), objects.vertices().end());
  std::size_t best_root_hits = 0;
  for (Vertex root : ball) {
    auto row = bfs_distances(g, root);
    Distance radius = 0;
    for (Vertex v : ball) radius = std::max(radius, row.dist[v]);
    std::size_t inner = 0, inside = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (row.dist[v] < radius) {
        ++inner;
        inside += ball.count(v);
      }
    }
    if (inner == inside) best_root_hits++;
  }
  EXPECT_GE(best_root_hits, 1u);
}

TEST(BallObjects, ObjectsWithinBallRadius) {
  auto g = rehub::testing::mixed_random_graph(400, 6);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t ball_size = scaled_count(0.05, 400);
    auto ball = generate_ball_objects(g, 0.05, 0.05, seed);
    auto subset = generate_ball_objects(g, 0.02, 0.05, seed);
    // Same seed picks the same root, so the subset lies inside the ball.
    std::set<Vertex> b(ball.vertices().begin(), ball.vertices().end());
    EXPECT_EQ(b.size(), ball_size);
    for (Vertex v : subset.vertices()) EXPECT_TRUE(b.count(v)) << v;
  }
  EXPECT_THROW(generate_ball_objects(g, 0.2, 0.1, 1), ConfigError);
}

TEST(RunSweep, Figure1SinglePoint) {
  auto g = rehub::testing::figure1_graph();
  auto labels = rehub::testing::figure1_labels();
  SweepConfig config;
  config.graph_name = "figure1";
  config.densities = {1.0};
  config.ks = {1};
  config.balls = {1.0};
  config.sets_per_point = 2;
  config.queries_per_set = 5;
  std::ostringstream csv;
  auto records = run_sweep(g, labels, config, &csv, nullptr);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].objects, 14u);
  EXPECT_LE(records[0].epsilon_max, 1.0);
  EXPECT_EQ(records[0].object_label_pairs, 39.0);

  // Exactly the worked example's object set via a dedicated point.
  auto index = offline_preprocess(labels, rehub::testing::figure1_objects(), 1);
  EXPECT_DOUBLE_EQ(index.epsilon(), 8.0 / 9.0);

  std::string header;
  std::istringstream lines(csv.str());
  std::getline(lines, header);
  EXPECT_EQ(header.rfind("graph,density,k,ball,objects,", 0), 0u);
  std::string row;
  std::getline(lines, row);
  EXPECT_EQ(row.rfind("figure1,1,1,1,14,2,5,", 0), 0u) << row;
  EXPECT_EQ(std::count(row.begin(), row.end(), ','), std::count(header.begin(), header.end(), ','));
  EXPECT_EQ(csv.str().find(';'), std::string::npos);
}

TEST(RunSweep, GridCountsSkipsAndInvariants) {
  auto g = rehub::testing::mixed_random_graph(300, 3);
  auto labels = build_pll_labels(g, degree_ordering(g));
  SweepConfig config;
  config.densities = {0.01, 0.05};
  config.ks = {1, 4};
  config.balls = {1.0, 0.2};
  config.sets_per_point = 3;
  config.queries_per_set = 10;
  std::ostringstream log;
  auto records = run_sweep(g, labels, config, nullptr, &log);
  // D=0.01 gives |P|=3, infeasible for k=4 (both ball values).
  EXPECT_EQ(records.size(), 8u - 2u);
  EXPECT_NE(log.str().find("skipping"), std::string::npos);
  for (const auto& r : records) {
    EXPECT_LE(r.epsilon_max, 1.0);
    EXPECT_GT(r.epsilon, 0.0);
    EXPECT_GE(r.online_mean_us, 0.0);
    const double parts = r.knn_labels_ms + r.batch_knn_ms + r.rknn_labels_ms;
    EXPECT_NEAR(parts, r.offline_total_ms, 0.5 + 0.05 * r.offline_total_ms);
    EXPECT_DOUBLE_EQ(r.model_rknn_labels_bytes, 5.0 * r.rknn_label_pairs);
  }
}

TEST(RunSweep, DeterministicApartFromTimings) {
  auto g = rehub::testing::mixed_random_graph(200, 7);
  auto labels = build_pll_labels(g, degree_ordering(g));
  SweepConfig config;
  config.densities = {0.05};
  config.ks = {1, 2};
  config.sets_per_point = 4;
  config.queries_per_set = 5;
  config.seed = 11;
  auto a = run_sweep(g, labels, config, nullptr, nullptr);
  auto b = run_sweep(g, labels, config, nullptr, nullptr);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].epsilon, b[i].epsilon);
    EXPECT_EQ(a[i].rknn_label_pairs, b[i].rknn_label_pairs);
    EXPECT_EQ(a[i].mean_touched_pairs, b[i].mean_touched_pairs);
  }
}

TEST(SweepConfig, Validation) {
  SweepConfig config;
  config.densities = {0.0};
  EXPECT_THROW(config.validate(), ConfigError);
  config = {};
  config.ks = {0};
  EXPECT_THROW(config.validate(), ConfigError);
  config = {};
  config.sets_per_point = 0;
  EXPECT_THROW(config.validate(), ConfigError);
  config = {};
  config.balls = {};
  EXPECT_THROW(config.validate(), ConfigError);
}
