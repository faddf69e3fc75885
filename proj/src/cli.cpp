#include "rehub/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "rehub/bench.hpp"
#include "rehub/error.hpp"
#include "rehub/graph.hpp"
#include "rehub/hub_labels.hpp"
#include "rehub/offline.hpp"
#include "rehub/online.hpp"
#include "rehub/oracle.hpp"

namespace rehub::cli {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

// Raw IDs live next to the label file, one per line in dense order.
fs::path id_map_path(const fs::path& labels) {
  fs::path p = labels;
  p += ".ids";
  return p;
}

void write_id_map(const fs::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot create ID map " + path.string());
  for (auto raw : g.raw_ids()) out << raw << '\n';
  if (!out) throw FormatError("write failed for " + path.string());
}

class IdMap {
 public:
  IdMap(const fs::path& path, std::size_t vertex_count) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open ID map " + path.string());
    std::uint64_t raw = 0;
    while (in >> raw) {
      dense_.emplace(raw, static_cast<Vertex>(raw_.size()));
      raw_.push_back(raw);
    }
    if (!in.eof()) throw FormatError("malformed ID map " + path.string());
    if (raw_.size() != vertex_count || dense_.size() != raw_.size()) {
      throw FormatError("ID map " + path.string() + " does not match the label file");
    }
  }

  std::uint64_t raw(Vertex v) const { return raw_.at(v); }

  Vertex dense(std::uint64_t raw) const {
    auto it = dense_.find(raw);
    if (it == dense_.end()) {
      throw RangeError("vertex " + std::to_string(raw) + " is not in the indexed graph");
    }
    return it->second;
  }

  std::span<const std::uint64_t> raw_ids() const { return raw_; }

 private:
  std::vector<std::uint64_t> raw_;
  std::unordered_map<std::uint64_t, Vertex> dense_;
};

std::vector<std::uint64_t> read_object_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open objects file " + path.string());
  std::vector<std::uint64_t> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream fields(line);
    std::uint64_t raw = 0;
    std::string rest;
    if (!(fields >> raw) || (fields >> rest)) {
      throw ParseError(line_no, "expected one vertex ID in " + path.string());
    }
    ids.push_back(raw);
  }
  return ids;
}

Graph load_connected_graph(const fs::path& path, std::ostream& err) {
  Graph g = read_edge_list_file(path);
  if (!is_connected(g)) {
    Graph lcc = largest_connected_component(g);
    err << "note: using largest connected component (" << lcc.vertex_count() << " of "
        << g.vertex_count() << " vertices)\n";
    return lcc;
  }
  return g;
}

std::string format_distance(Distance d) {
  return d == kInfinity ? std::string("inf") : std::to_string(d);
}

void print_members(std::ostream& out, const IdMap& ids, const ObjectSet& objects,
                   const std::vector<Distance>& distances, bool all) {
  for (ObjectIndex i = 0; i < distances.size(); ++i) {
    if (!all && distances[i] == kInfinity) continue;
    out << ids.raw(objects[i]) << '\t' << format_distance(distances[i]) << '\n';
  }
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::istringstream field(item);
    T value{};
    std::string rest;
    if (!(field >> value) || (field >> rest)) {
      throw ConfigError(std::string("invalid ") + what + " list: " + text);
    }
    values.push_back(value);
  }
  if (values.empty()) throw ConfigError(std::string("empty ") + what + " list");
  return values;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"rehub: reverse k-nearest-neighbor queries over hub labels", "rehub"};
  app.require_subcommand(1);

  struct {
    std::string graph, labels, index, objects, out_path;
    std::size_t k = 1;
    int threads = 1;
    std::uint64_t vertex = 0;
    bool all = false, oracle = false;
    std::string densities = "0.001,0.01,0.1", ks = "1,2,4,8,16,32", balls = "1.0";
    std::size_t sets = 100, queries = 100;
    std::uint64_t seed = 1;
    std::string name;
  } opt;

  auto* build = app.add_subcommand("build", "Build hub labels for an edge-list graph");
  build->add_option("--graph", opt.graph, "Edge-list file")->required()->check(CLI::ExistingFile);
  build->add_option("--out", opt.out_path, "Output label file")->required();

  auto* pre = app.add_subcommand("preprocess", "Offline phase for an object set");
  pre->add_option("--labels", opt.labels, "Label file")->required()->check(CLI::ExistingFile);
  pre->add_option("--objects", opt.objects, "Objects file")->required()->check(CLI::ExistingFile);
  pre->add_option("--k", opt.k, "Neighbor count")->required()->check(CLI::PositiveNumber);
  pre->add_option("--out", opt.out_path, "Output index file")->required();
  pre->add_option("--threads", opt.threads, "Worker threads for batch kNN")
      ->check(CLI::PositiveNumber);

  auto* query = app.add_subcommand("query", "Reverse kNN query from a vertex");
  query->add_option("--labels", opt.labels, "Label file")->required()->check(CLI::ExistingFile);
  query->add_option("--index", opt.index, "Index file")->required()->check(CLI::ExistingFile);
  query->add_option("--vertex", opt.vertex, "Raw query vertex ID")->required();
  query->add_flag("--all", opt.all, "Print every object, inf for non-members");
  auto* oracle_flag = query->add_flag("--oracle", opt.oracle, "Answer with the BFS oracle");
  auto* oracle_graph =
      query->add_option("--graph", opt.graph, "Edge-list file (for --oracle)")
          ->check(CLI::ExistingFile);
  oracle_flag->needs(oracle_graph);

  auto* knn = app.add_subcommand("knn", "k nearest objects of a vertex");
  knn->add_option("--labels", opt.labels, "Label file")->required()->check(CLI::ExistingFile);
  knn->add_option("--index", opt.index, "Index file")->required()->check(CLI::ExistingFile);
  knn->add_option("--vertex", opt.vertex, "Raw query vertex ID")->required();
  knn->add_option("--k", opt.k, "Neighbor count")->required()->check(CLI::PositiveNumber);

  auto* bench = app.add_subcommand("bench", "Density / k / ball sweep written as CSV");
  bench->add_option("--graph", opt.graph, "Edge-list file")->required()->check(CLI::ExistingFile);
  bench->add_option("--labels", opt.labels, "Label file")->required()->check(CLI::ExistingFile);
  bench->add_option("--densities", opt.densities, "Comma separated object densities");
  bench->add_option("--ks", opt.ks, "Comma separated k values");
  bench->add_option("--balls", opt.balls, "Comma separated ball fractions (1 = uniform)");
  bench->add_option("--sets", opt.sets, "Object sets per grid point")->check(CLI::PositiveNumber);
  bench->add_option("--queries", opt.queries, "Queries per object set")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", opt.seed, "RNG seed");
  bench->add_option("--threads", opt.threads, "Worker threads for batch kNN")
      ->check(CLI::PositiveNumber);
  bench->add_option("--name", opt.name, "Graph name for the CSV (default: file stem)");
  bench->add_option("--out", opt.out_path, "Output CSV file")->required();

  auto* stats = app.add_subcommand("stats", "Graph, label and index statistics");
  stats->add_option("--graph", opt.graph, "Edge-list file")->check(CLI::ExistingFile);
  auto* stats_labels =
      stats->add_option("--labels", opt.labels, "Label file")->check(CLI::ExistingFile);
  stats->add_option("--index", opt.index, "Index file")
      ->check(CLI::ExistingFile)
      ->needs(stats_labels);

  std::vector<std::string> argv_storage{"rehub"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "rehub: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*build) {
      const auto t0 = Clock::now();
      Graph g = load_connected_graph(opt.graph, err);
      const double load_s = seconds_since(t0);
      const auto t1 = Clock::now();
      LabelSet labels = build_pll_labels(g, degree_ordering(g));
      const double build_s = seconds_since(t1);
      save_labels_file(labels, opt.out_path);
      write_id_map(id_map_path(opt.out_path), g);
      out << "vertices\t" << g.vertex_count() << '\n'
          << "edges\t" << g.edge_count() << '\n'
          << "label_pairs\t" << labels.total_pairs() << '\n'
          << "load_seconds\t" << load_s << '\n'
          << "label_seconds\t" << build_s << '\n';
    } else if (*pre) {
      LabelSet labels = load_labels_file(opt.labels);
      IdMap ids(id_map_path(opt.labels), labels.vertex_count());
      std::vector<Vertex> dense;
      for (auto raw : read_object_file(opt.objects)) dense.push_back(ids.dense(raw));
      ObjectSet objects(std::move(dense), labels.vertex_count());
      OfflineIndex index = offline_preprocess(labels, objects, opt.k, {opt.threads});
      save_index_file(index, opt.out_path);
      out << "objects\t" << objects.size() << '\n'
          << "k\t" << index.k << '\n'
          << "rknn_label_pairs\t" << index.rknn_labels.total_pairs() << '\n'
          << "epsilon\t" << index.epsilon() << '\n'
          << "knn_labels_ms\t" << index.timings.knn_labels_ms << '\n'
          << "batch_knn_ms\t" << index.timings.batch_knn_ms << '\n'
          << "rknn_labels_ms\t" << index.timings.rknn_labels_ms << '\n'
          << "offline_total_ms\t" << index.timings.total_ms << '\n';
    } else if (*query) {
      LabelSet labels = load_labels_file(opt.labels);
      IdMap ids(id_map_path(opt.labels), labels.vertex_count());
      OfflineIndex index = load_index_file(opt.index, labels);
      const Vertex q = ids.dense(opt.vertex);
      RknnAnswer answer = rknn_query(index, labels, q);
      if (!opt.oracle) {
        print_members(out, ids, index.objects, answer.distances, opt.all);
      } else {
        Graph g = load_connected_graph(opt.graph, err);
        if (!std::equal(g.raw_ids().begin(), g.raw_ids().end(), ids.raw_ids().begin(),
                        ids.raw_ids().end())) {
          throw FormatError("graph does not match the label file's vertex IDs");
        }
        std::vector<Distance> expected(index.objects.size(), kInfinity);
        for (auto p : oracle_rknn(g, index.objects, q, index.k)) expected[p.index] = p.dist;
        print_members(out, ids, index.objects, expected, opt.all);
        if (expected != answer.distances) {
          err << "oracle: MISMATCH with the index answer\n";
          return kExitData;
        }
        err << "oracle: agrees with the index answer\n";
      }
    } else if (*knn) {
      LabelSet labels = load_labels_file(opt.labels);
      IdMap ids(id_map_path(opt.labels), labels.vertex_count());
      OfflineIndex index = load_index_file(opt.index, labels);
      for (const auto& p : knn_query(index.knn_labels, labels, ids.dense(opt.vertex), opt.k)) {
        out << ids.raw(index.objects[p.index]) << '\t' << p.dist << '\n';
      }
    } else if (*bench) {
      Graph g = load_connected_graph(opt.graph, err);
      LabelSet labels = load_labels_file(opt.labels);
      if (labels.vertex_count() != g.vertex_count()) {
        throw FormatError("label file does not match the graph");
      }
      SweepConfig config;
      config.graph_name = opt.name.empty() ? fs::path(opt.graph).stem().string() : opt.name;
      config.densities = parse_list<double>(opt.densities, "density");
      config.ks = parse_list<std::size_t>(opt.ks, "k");
      config.balls = parse_list<double>(opt.balls, "ball");
      config.sets_per_point = opt.sets;
      config.queries_per_set = opt.queries;
      config.seed = opt.seed;
      config.threads = opt.threads;
      std::ofstream csv(opt.out_path);
      if (!csv) throw FormatError("cannot create " + opt.out_path);
      auto records = run_sweep(g, labels, config, &csv, &err);
      out << "records\t" << records.size() << '\n';
    } else if (*stats) {
      if (opt.graph.empty() && opt.labels.empty()) {
        throw ConfigError("stats needs --graph and/or --labels");
      }
      out << std::fixed << std::setprecision(2);
      if (!opt.graph.empty()) {
        Graph g = read_edge_list_file(opt.graph);
        out << "graph.vertices: " << g.vertex_count() << '\n'
            << "graph.edges: " << g.edge_count() << '\n'
            << "graph.avg_degree: " << g.average_degree() << '\n'
            << "graph.connected: " << (is_connected(g) ? "yes" : "no") << '\n';
      }
      if (!opt.labels.empty()) {
        LabelSet labels = load_labels_file(opt.labels);
        out << "labels.vertices: " << labels.vertex_count() << '\n'
            << "labels.total_pairs: " << labels.total_pairs() << '\n'
            << "labels.pairs_per_vertex: " << labels.average_label_size() << '\n';
        if (!opt.index.empty()) {
          OfflineIndex index = load_index_file(opt.index, labels);
          const double n = static_cast<double>(labels.vertex_count());
          const double p = static_cast<double>(index.objects.size());
          const double k = static_cast<double>(index.k);
          out << "index.k: " << index.k << '\n'
              << "index.objects: " << index.objects.size() << '\n'
              << "index.density: " << std::setprecision(6) << p / n << std::setprecision(2)
              << '\n'
              << "index.object_label_pairs: " << index.object_label_pairs << '\n'
              << "index.knn_label_pairs: " << index.knn_labels.total_pairs() << '\n'
              << "index.knn_result_pairs: " << index.objects.size() * index.k << '\n'
              << "index.rknn_label_pairs: " << index.rknn_labels.total_pairs() << '\n'
              << "index.epsilon: " << std::setprecision(4) << index.epsilon()
              << std::setprecision(2) << '\n'
              << "# memory model, 5 bytes per pair (4 byte index + 1 byte distance)\n"
              << "model.knn_labels_bytes: " << 5.0 * (k + 1) * n << '\n'
              << "model.knn_results_bytes: " << 5.0 * k * p << '\n'
              << "model.rknn_labels_bytes: "
              << 5.0 * static_cast<double>(index.rknn_labels.total_pairs()) << '\n'
              << "model.online_result_bytes: " << p << '\n'
              << "# actual pair counts at 5 bytes per pair\n"
              << "actual.knn_labels_bytes: "
              << 5.0 * static_cast<double>(index.knn_labels.total_pairs()) << '\n';
        }
      }
    }
  } catch (const ConfigError& e) {
    err << "rehub: error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "rehub: error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace rehub::cli
