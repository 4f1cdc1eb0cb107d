#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "weakiasi/graph.hpp"
#include "weakiasi/integer_set.hpp"

namespace weakiasi {

/// Vertex -> set-label assignment. Vertex v carries labels()[v].
/// Injectivity is not enforced here; the verifiers report it.
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(std::vector<IntegerSet> labels) : labels_(std::move(labels)) {}

  std::size_t size() const noexcept { return labels_.size(); }
  const IntegerSet& operator[](Vertex v) const { return labels_.at(v); }
  std::span<const IntegerSet> labels() const noexcept { return labels_; }

  // Labels of `vertices`, in order; used for layer and subgraph restriction.
  Labeling restricted_to(std::span<const Vertex> vertices) const {
    std::vector<IntegerSet> out;
    out.reserve(vertices.size());
    for (Vertex v : vertices) out.push_back(labels_.at(v));
    return Labeling(std::move(out));
  }

  Labeling with_label(Vertex v, IntegerSet label) const {
    Labeling copy = *this;
    copy.labels_.at(v) = std::move(label);
    return copy;
  }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<IntegerSet> labels_;
};

enum class ViolationKind {
  DuplicateVertexLabel,
  DuplicateEdgeLabel,
  WeakConditionFailed,
  AdjacentNonSingletons,
};

inline std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::DuplicateVertexLabel: return "duplicate-vertex-label";
    case ViolationKind::DuplicateEdgeLabel: return "duplicate-edge-label";
    case ViolationKind::WeakConditionFailed: return "weak-condition-failed";
    case ViolationKind::AdjacentNonSingletons: return "adjacent-non-singletons";
  }
  return "unknown";
}

// Witness: the two vertices sharing a label, the two edges sharing a label,
// or the single offending edge.
struct Violation {
  ViolationKind kind;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

struct MonoStats {
  std::size_t mono_vertices = 0;  // r: vertices with |f(v)| = 1
  std::vector<Edge> mono_edges;   // edges with |f+(uv)| = 1

  std::size_t mono_edge_count() const noexcept { return mono_edges.size(); }
};

struct VerificationReport {
  bool passed = true;
  std::vector<Violation> violations;
  MonoStats stats;

  std::size_t count(ViolationKind kind) const {
    return static_cast<std::size_t>(std::count_if(
        violations.begin(), violations.end(), [kind](const Violation& v) { return v.kind == kind; }));
  }
};

namespace detail {

inline void require_total(const Graph& g, const Labeling& l, const char* op) {
  if (l.size() != g.vertex_count()) {
    throw InvalidInput(std::string(op) + ": labeling covers " + std::to_string(l.size()) +
                       " vertices but the graph has " + std::to_string(g.vertex_count()));
  }
}

// Indices grouped by equal value; emits each consecutive equal pair once.
template <typename T, typename Emit>
void for_each_duplicate(const std::vector<T>& values, Emit emit) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (values[order[k - 1]] == values[order[k]]) emit(order[k - 1], order[k]);
  }
}

}  // namespace detail

/// f+(uv) = f(u) + f(v), only defined on edges of g.
inline IntegerSet induced_edge_label(const Graph& g, const Labeling& l, Vertex u, Vertex v) {
  detail::require_total(g, l, "induced_edge_label");
  if (!g.adjacent(u, v)) {
    throw InvalidInput("induced_edge_label: {" + std::to_string(u) + "," + std::to_string(v) +
                       "} is not an edge");
  }
  return sumset(l[u], l[v]);
}

inline MonoStats mono_indexed_stats(const Graph& g, const Labeling& l) {
  detail::require_total(g, l, "mono_indexed_stats");
  MonoStats stats;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (l[v].is_singleton()) ++stats.mono_vertices;
  for (const Edge& e : g.edges()) {
    if (sumset(l[e.u], l[e.v]).is_singleton()) stats.mono_edges.push_back(e);
  }
  return stats;
}

/// Checks that f and the induced f+ are both injective.
inline VerificationReport verify_iasi(const Graph& g, const Labeling& l) {
  detail::require_total(g, l, "verify_iasi");
  VerificationReport report;

  std::vector<IntegerSet> vertex_labels(l.labels().begin(), l.labels().end());
  detail::for_each_duplicate(vertex_labels, [&](std::size_t a, std::size_t b) {
    report.violations.push_back({ViolationKind::DuplicateVertexLabel,
                                 {static_cast<Vertex>(a), static_cast<Vertex>(b)},
                                 {}});
  });

  const auto edges = g.edges();
  std::vector<IntegerSet> edge_labels;
  edge_labels.reserve(edges.size());
  for (const Edge& e : edges) edge_labels.push_back(sumset(l[e.u], l[e.v]));
  detail::for_each_duplicate(edge_labels, [&](std::size_t a, std::size_t b) {
    report.violations.push_back({ViolationKind::DuplicateEdgeLabel, {}, {edges[a], edges[b]}});
  });

  report.stats = mono_indexed_stats(g, l);
  report.passed = report.violations.empty();
  return report;
}

/// IASI check plus |f+(uv)| = max(|f(u)|, |f(v)|) on every edge. Edges with
/// two non-singleton ends are listed separately: for integer sets
/// |A+B| >= |A|+|B|-1, so such an edge can never satisfy the condition.
inline VerificationReport verify_weak_iasi(const Graph& g, const Labeling& l) {
  VerificationReport report = verify_iasi(g, l);
  for (const Edge& e : g.edges()) {
    const IntegerSet& a = l[e.u];
    const IntegerSet& b = l[e.v];
    if (sumset(a, b).size() != std::max(a.size(), b.size())) {
      report.violations.push_back({ViolationKind::WeakConditionFailed, {}, {e}});
    }
    if (!a.is_singleton() && !b.is_singleton()) {
      report.violations.push_back({ViolationKind::AdjacentNonSingletons, {}, {e}});
    }
  }
  report.passed = report.violations.empty();
  return report;
}

// Every edge label has exactly k elements.
inline bool is_k_uniform(const Graph& g, const Labeling& l, std::size_t k) {
  detail::require_total(g, l, "is_k_uniform");
  if (k == 0) throw InvalidInput("is_k_uniform: k must be positive");
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return sumset(l[e.u], l[e.v]).size() == k; });
}

inline std::vector<Vertex> non_singleton_vertices(const Labeling& l) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < l.size(); ++v)
    if (!l[v].is_singleton()) out.push_back(v);
  return out;
}

}  // namespace weakiasi
