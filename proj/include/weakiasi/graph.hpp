#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "weakiasi/error.hpp"

namespace weakiasi {

using Vertex = std::uint32_t;

// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct GraphOptions {
  // Graphs are expected to have no isolated vertices unless this is set.
  bool allow_isolated = false;
};

/// Simple finite undirected graph on vertices 0..n-1.
///
/// Immutable after construction. The edge list is kept sorted and
/// duplicate-free; adjacency lists are sorted so `adjacent` is a binary
/// search. Construction rejects self-loops, duplicates, out-of-range
/// endpoints and (unless `GraphOptions::allow_isolated`) isolated vertices.
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t n, std::vector<Edge> edges, GraphOptions options = {})
      : n_(n), edges_(std::move(edges)), adjacency_(n) {
    for (const Edge& e : edges_) {
      if (e.u == e.v) {
        throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
      }
      if (e.v >= n_) {
        throw InvalidInput("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                           "} has an endpoint outside 0.." + std::to_string(n_) + "-1");
      }
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
      throw InvalidInput("duplicate edge {" + std::to_string(dup->u) + "," +
                         std::to_string(dup->v) + "}");
    }
    for (const Edge& e : edges_) {
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
    if (!options.allow_isolated) {
      for (std::size_t v = 0; v < n_; ++v) {
        if (adjacency_[v].empty()) {
          throw InvalidInput("vertex " + std::to_string(v) +
                             " is isolated (use allow_isolated to permit)");
        }
      }
    }
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return n_ == 0; }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  bool contains(Vertex v) const noexcept { return v < n_; }

  bool adjacent(Vertex a, Vertex b) const {
    if (!contains(a) || !contains(b)) return false;
    const auto& nbrs = adjacency_[a];
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
  }

  bool has_isolated_vertex() const {
    return std::any_of(adjacency_.begin(), adjacency_.end(),
                       [](const auto& nbrs) { return nbrs.empty(); });
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

inline constexpr GraphOptions kAllowIsolated{.allow_isolated = true};

// True when no two vertices of `set` are adjacent in g.
inline bool is_independent(const Graph& g, std::span<const Vertex> set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (g.adjacent(set[i], set[j])) return false;
    }
  }
  return true;
}

/// Subgraph induced on `vertices`; vertex k of the result is vertices[k].
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<std::int64_t> position(g.vertex_count(), -1);
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (!g.contains(vertices[k])) {
      throw InvalidInput("induced_subgraph: vertex " + std::to_string(vertices[k]) +
                         " out of range");
    }
    if (position[vertices[k]] >= 0) {
      throw InvalidInput("induced_subgraph: vertex " + std::to_string(vertices[k]) +
                         " listed twice");
    }
    position[vertices[k]] = static_cast<std::int64_t>(k);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (position[e.u] >= 0 && position[e.v] >= 0) {
      edges.emplace_back(static_cast<Vertex>(position[e.u]), static_cast<Vertex>(position[e.v]));
    }
  }
  return Graph(vertices.size(), std::move(edges), kAllowIsolated);
}

// Copy of g with one extra edge; throws if the edge already exists.
inline Graph with_edge(const Graph& g, Edge e) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.push_back(e);
  return Graph(g.vertex_count(), std::move(edges), kAllowIsolated);
}

inline Graph without_edge(const Graph& g, Edge e) {
  std::vector<Edge> edges;
  for (const Edge& x : g.edges()) {
    if (x != e) edges.push_back(x);
  }
  return Graph(g.vertex_count(), std::move(edges), kAllowIsolated);
}

namespace families {

// P_n: path on n vertices.
inline Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(Vertex(i), Vertex(i + 1));
  return Graph(n, std::move(edges), kAllowIsolated);
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(Vertex(i), Vertex((i + 1) % n));
  return Graph(n, std::move(edges));
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(Vertex(i), Vertex(j));
  return Graph(n, std::move(edges), kAllowIsolated);
}

// S_k: star with centre 0 and k leaves.
inline Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(Vertex(0), Vertex(i));
  return Graph(leaves + 1, std::move(edges), kAllowIsolated);
}

}  // namespace families

inline bool is_complete(const Graph& g) {
  const std::size_t n = g.vertex_count();
  return g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

// Connected 2-regular graph on at least 3 vertices.
inline bool is_cycle(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 3 || g.edge_count() != n) return false;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) != 2) return false;
  // Walk around from vertex 0; a single cycle returns after exactly n steps.
  Vertex prev = static_cast<Vertex>(-1);
  Vertex cur = 0;
  std::size_t steps = 0;
  do {
    auto nb = g.neighbors(cur);
    Vertex next = nb[0] != prev ? nb[0] : nb[1];
    prev = cur;
    cur = next;
    ++steps;
  } while (cur != 0 && steps <= n);
  return steps == n;
}

inline bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

}  // namespace weakiasi
