#pragma once

// JSON and DOT serialisation. Requires nlohmann/json on the include path.

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "weakiasi/constructions.hpp"
#include "weakiasi/graph.hpp"
#include "weakiasi/labeling.hpp"
#include "weakiasi/products.hpp"
#include "weakiasi/sparing.hpp"

namespace weakiasi {

using json = nlohmann::json;

// Malformed JSON or a document that does not match the expected shape.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline json to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const json& doc, GraphOptions options = {}) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    throw ParseError("graph JSON needs \"n\" and \"edges\"");
  }
  if (!doc["n"].is_number_unsigned()) throw ParseError("graph \"n\" must be a non-negative integer");
  if (!doc["edges"].is_array()) throw ParseError("graph \"edges\" must be an array");
  std::vector<Edge> edges;
  for (const json& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
      throw ParseError("each edge must be a pair of non-negative integers");
    }
    edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  return Graph(doc["n"].get<std::size_t>(), std::move(edges), options);
}

inline json to_json(const Labeling& l) {
  json labels = json::object();
  for (Vertex v = 0; v < l.size(); ++v) {
    labels[std::to_string(v)] = std::vector<std::uint64_t>(l[v].begin(), l[v].end());
  }
  return {{"labels", std::move(labels)}};
}

// Keys must be exactly "0".."k-1"; the verifier later checks k against |V|.
inline Labeling labeling_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("labels") || !doc["labels"].is_object()) {
    throw ParseError("labeling JSON needs a \"labels\" object");
  }
  const json& labels = doc["labels"];
  std::map<Vertex, IntegerSet> by_vertex;
  for (auto it = labels.begin(); it != labels.end(); ++it) {
    Vertex v = 0;
    try {
      std::size_t used = 0;
      unsigned long parsed = std::stoul(it.key(), &used);
      if (used != it.key().size()) throw std::invalid_argument("trailing characters");
      v = static_cast<Vertex>(parsed);
    } catch (const std::exception&) {
      throw ParseError("labeling key \"" + it.key() + "\" is not a vertex id");
    }
    if (!it.value().is_array() || it.value().empty()) {
      throw ParseError("label of vertex " + it.key() + " must be a nonempty integer array");
    }
    std::vector<std::uint64_t> elements;
    for (const json& x : it.value()) {
      if (!x.is_number_unsigned()) {
        throw ParseError("label of vertex " + it.key() + " must hold non-negative integers");
      }
      elements.push_back(x.get<std::uint64_t>());
    }
    by_vertex.emplace(v, IntegerSet(std::move(elements)));
  }
  std::vector<IntegerSet> ordered;
  for (auto& [v, set] : by_vertex) {
    if (v != ordered.size()) {
      throw ParseError("labeling is partial: vertex " + std::to_string(ordered.size()) + " has no label");
    }
    ordered.push_back(set);
  }
  return Labeling(std::move(ordered));
}

inline json to_json(const Violation& v) {
  json edges = json::array();
  for (const Edge& e : v.edges) edges.push_back({e.u, e.v});
  return {{"kind", std::string(to_string(v.kind))}, {"vertices", v.vertices}, {"edges", std::move(edges)}};
}

inline json to_json(const VerificationReport& r) {
  json violations = json::array();
  for (const Violation& v : r.violations) violations.push_back(to_json(v));
  json mono = json::array();
  for (const Edge& e : r.stats.mono_edges) mono.push_back({e.u, e.v});
  return {{"passed", r.passed},
          {"violations", std::move(violations)},
          {"statistics",
           {{"mono_vertices", r.stats.mono_vertices},
            {"mono_edges", r.stats.mono_edge_count()},
            {"mono_edge_list", std::move(mono)}}}};
}

inline json to_json(const SparingResult& r) {
  json out = {{"value", r.value}, {"witness", r.witness}, {"method", std::string(to_string(r.method))}};
  if (r.formula_value) out["formula_value"] = *r.formula_value;
  return out;
}

inline json to_json(const LabelPlan& p) {
  json out = {{"non_singleton", p.non_singleton}, {"provenance", std::string(to_string(p.provenance))}};
  if (!p.demoted.empty()) out["demoted"] = p.demoted;
  return out;
}

inline json to_json(const ProductVertexMap& m) {
  json coords = json::array();
  for (Vertex v = 0; v < m.size(); ++v) {
    auto [i, j] = m.coords(v);
    coords.push_back({i, j});
  }
  return {{"kind", "grid"}, {"n1", m.n1()}, {"n2", m.n2()}, {"coords", std::move(coords)}};
}

inline json to_json(const CoronaVertexMap& m) {
  json copies = json::array();
  for (Vertex i = 0; i < m.n1(); ++i) copies.push_back(m.copy(i));
  return {{"kind", "corona"}, {"n1", m.n1()}, {"n2", m.n2()}, {"copies", std::move(copies)}};
}

inline json to_json(const RootedVertexMap& m) {
  json copies = json::array();
  for (Vertex i = 0; i < m.n1(); ++i) copies.push_back(m.copy(i));
  return {{"kind", "rooted"}, {"n1", m.n1()}, {"n2", m.n2()}, {"root", m.root()},
          {"copies", std::move(copies)}};
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("error writing " + path);
}

/// Graphviz DOT. With a labeling, each vertex shows its set and mono-indexed
/// edges are drawn red and bold.
inline std::string to_dot(const Graph& g, const Labeling* labels = nullptr) {
  if (labels && labels->size() != g.vertex_count()) {
    throw InvalidInput("to_dot: labeling does not cover the graph");
  }
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (labels) out << " [label=\"" << v << ": " << (*labels)[v].str() << "\"]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    if (labels && sumset((*labels)[e.u], (*labels)[e.v]).is_singleton()) {
      out << " [color=red, style=bold]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

inline void export_dot(const Graph& g, const Labeling* labels, const std::string& path) {
  write_text_file(path, to_dot(g, labels));
}

}  // namespace weakiasi
