#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rehub/error.hpp"
#include "rehub/graph.hpp"
#include "rehub/hub_labels.hpp"
#include "rehub/offline.hpp"
#include "rehub/online.hpp"
#include "rehub/oracle.hpp"

namespace py = pybind11;
using namespace rehub;

namespace {

std::optional<Distance> finite(Distance d) {
  if (d == kInfinity) return std::nullopt;
  return d;
}

std::vector<std::pair<ObjectIndex, Distance>> as_tuples(const std::vector<ObjectPair>& pairs) {
  std::vector<std::pair<ObjectIndex, Distance>> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.emplace_back(p.index, p.dist);
  return out;
}

ObjectSet make_objects(const Graph& g, std::vector<Vertex> vertices) {
  return ObjectSet(std::move(vertices), g.vertex_count());
}

}  // namespace

PYBIND11_MODULE(_rehub, m) {
  m.doc() = "Hub labels with reverse k-nearest-neighbor queries";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<FormatError>(m, "FormatError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<RangeError>(m, "RangeError", base.ptr());
  py::register_exception<DataError>(m, "DataError", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def_static(
          "from_edges",
          [](std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); },
          py::arg("vertex_count"), py::arg("edges"))
      .def_static(
          "from_text",
          [](const std::string& text) {
            std::istringstream in(text);
            return parse_edge_list(in);
          },
          py::arg("text"))
      .def_static("read", &read_edge_list_file, py::arg("path"))
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("neighbors",
           [](const Graph& g, Vertex v) {
             auto span = g.neighbors(v);
             return std::vector<Vertex>(span.begin(), span.end());
           })
      .def("raw_id", &Graph::raw_id)
      .def("dense_id", &Graph::dense_id)
      .def("is_connected", [](const Graph& g) { return is_connected(g); })
      .def("largest_connected_component",
           [](const Graph& g) { return largest_connected_component(g); });

  py::class_<LabelSet>(m, "LabelSet")
      .def_static("load", &load_labels_file, py::arg("path"))
      .def("save", [](const LabelSet& l, const std::filesystem::path& p) { save_labels_file(l, p); })
      .def("to_bytes",
           [](const LabelSet& l) {
             std::ostringstream out;
             save_labels(l, out);
             return py::bytes(out.str());
           })
      .def_static(
          "from_bytes",
          [](const py::bytes& data) {
            std::istringstream in{std::string(data)};
            return load_labels(in);
          },
          py::arg("data"))
      .def_property_readonly("vertex_count", &LabelSet::vertex_count)
      .def_property_readonly("total_pairs", &LabelSet::total_pairs)
      .def_property_readonly("average_label_size", &LabelSet::average_label_size)
      .def("label",
           [](const LabelSet& l, Vertex v) {
             std::vector<std::pair<Vertex, Distance>> out;
             for (const auto& e : l.label(v)) out.emplace_back(e.hub, e.dist);
             return out;
           })
      .def("distance",
           [](const LabelSet& l, Vertex s, Vertex t) { return finite(hl_distance(l, s, t)); })
      .def("__eq__", [](const LabelSet& a, const LabelSet& b) { return a == b; });

  m.def(
      "build_labels", [](const Graph& g) { return build_pll_labels(g, degree_ordering(g)); },
      py::arg("graph"), "Pruned landmark labels under degree-descending order.");

  py::class_<OfflineIndex>(m, "Index")
      .def_static(
          "load",
          [](const std::filesystem::path& p, const LabelSet& l) { return load_index_file(p, l); },
          py::arg("path"), py::arg("labels"))
      .def("save", [](const OfflineIndex& i, const std::filesystem::path& p) { save_index_file(i, p); })
      .def("to_bytes",
           [](const OfflineIndex& i) {
             std::ostringstream out;
             save_index(i, out);
             return py::bytes(out.str());
           })
      .def_static(
          "from_bytes",
          [](const py::bytes& data, const LabelSet& l) {
            std::istringstream in{std::string(data)};
            return load_index(in, l);
          },
          py::arg("data"), py::arg("labels"))
      .def_readonly("k", &OfflineIndex::k)
      .def_property_readonly("objects",
                             [](const OfflineIndex& i) {
                               auto v = i.objects.vertices();
                               return std::vector<Vertex>(v.begin(), v.end());
                             })
      .def_property_readonly("epsilon", &OfflineIndex::epsilon)
      .def_property_readonly("rknn_label_pairs",
                             [](const OfflineIndex& i) { return i.rknn_labels.total_pairs(); })
      .def_readonly("object_label_pairs", &OfflineIndex::object_label_pairs)
      .def("knn",
           [](const OfflineIndex& i, ObjectIndex obj) {
             auto row = i.knn_results.row(obj);
             return as_tuples(std::vector<ObjectPair>(row.begin(), row.end()));
           })
      .def("__eq__", [](const OfflineIndex& a, const OfflineIndex& b) { return a == b; });

  m.def(
      "preprocess",
      [](const Graph& g, const LabelSet& labels, std::vector<Vertex> objects, std::size_t k,
         int threads) {
        py::gil_scoped_release release;
        return offline_preprocess(labels, make_objects(g, std::move(objects)), k, {threads});
      },
      py::arg("graph"), py::arg("labels"), py::arg("objects"), py::arg("k"),
      py::arg("threads") = 1);

  m.def(
      "rknn_query",
      [](const OfflineIndex& index, const LabelSet& labels, Vertex q) {
        return as_tuples(rknn_query(index, labels, q).members());
      },
      py::arg("index"), py::arg("labels"), py::arg("q"),
      "Members as (object index, distance) in object-index order.");

  m.def(
      "knn_query",
      [](const OfflineIndex& index, const LabelSet& labels, Vertex q, std::size_t k) {
        return as_tuples(knn_query(index.knn_labels, labels, q, k));
      },
      py::arg("index"), py::arg("labels"), py::arg("q"), py::arg("k"));

  m.def(
      "oracle_rknn",
      [](const Graph& g, std::vector<Vertex> objects, Vertex q, std::size_t k) {
        return as_tuples(oracle_rknn(g, make_objects(g, std::move(objects)), q, k));
      },
      py::arg("graph"), py::arg("objects"), py::arg("q"), py::arg("k"));

  m.def(
      "bfs_distances",
      [](const Graph& g, Vertex source) {
        std::vector<std::optional<Distance>> out;
        for (Distance d : bfs_distances(g, source).dist) out.push_back(finite(d));
        return out;
      },
      py::arg("graph"), py::arg("source"));
}
