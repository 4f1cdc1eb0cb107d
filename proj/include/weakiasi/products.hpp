#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "weakiasi/graph.hpp"

namespace weakiasi {

/// Row-major coordinates of a product on V(g1) x V(g2): (i, j) -> i*n2 + j.
class ProductVertexMap {
 public:
  ProductVertexMap() = default;
  ProductVertexMap(std::size_t n1, std::size_t n2) : n1_(n1), n2_(n2) {}

  std::size_t n1() const noexcept { return n1_; }
  std::size_t n2() const noexcept { return n2_; }
  std::size_t size() const noexcept { return n1_ * n2_; }

  Vertex id(Vertex i, Vertex j) const {
    if (i >= n1_ || j >= n2_) {
      throw InvalidInput("product coordinate (" + std::to_string(i) + "," + std::to_string(j) +
                         ") out of range");
    }
    return static_cast<Vertex>(i * n2_ + j);
  }

  std::pair<Vertex, Vertex> coords(Vertex id) const {
    if (id >= size()) throw InvalidInput("product vertex " + std::to_string(id) + " out of range");
    return {static_cast<Vertex>(id / n2_), static_cast<Vertex>(id % n2_)};
  }

  friend bool operator==(const ProductVertexMap&, const ProductVertexMap&) = default;

 private:
  std::size_t n1_ = 0;
  std::size_t n2_ = 0;
};

/// Corona g1 (.) g2: vertex i of g1 keeps id i; vertex j of the copy of g2
/// hanging off i gets id n1 + i*n2 + j.
class CoronaVertexMap {
 public:
  CoronaVertexMap() = default;
  CoronaVertexMap(std::size_t n1, std::size_t n2) : n1_(n1), n2_(n2) {}

  std::size_t n1() const noexcept { return n1_; }
  std::size_t n2() const noexcept { return n2_; }
  std::size_t size() const noexcept { return n1_ * (1 + n2_); }

  Vertex center(Vertex i) const {
    if (i >= n1_) throw InvalidInput("corona centre " + std::to_string(i) + " out of range");
    return i;
  }
  Vertex copy_vertex(Vertex i, Vertex j) const {
    if (i >= n1_ || j >= n2_) throw InvalidInput("corona copy coordinate out of range");
    return static_cast<Vertex>(n1_ + i * n2_ + j);
  }
  std::vector<Vertex> copy(Vertex i) const {
    std::vector<Vertex> out;
    for (Vertex j = 0; j < n2_; ++j) out.push_back(copy_vertex(i, j));
    return out;
  }

 private:
  std::size_t n1_ = 0;
  std::size_t n2_ = 0;
};

/// Rooted product: vertex i of g1 keeps id i and is merged with the root of
/// copy i; the other vertices of copy i follow in g2 order from
/// n1 + i*(n2-1).
class RootedVertexMap {
 public:
  RootedVertexMap() = default;
  RootedVertexMap(std::size_t n1, std::size_t n2, Vertex root) : n1_(n1), n2_(n2), root_(root) {}

  std::size_t n1() const noexcept { return n1_; }
  std::size_t n2() const noexcept { return n2_; }
  Vertex root() const noexcept { return root_; }
  std::size_t size() const noexcept { return n1_ * n2_; }

  Vertex id(Vertex copy, Vertex j) const {
    if (copy >= n1_ || j >= n2_) throw InvalidInput("rooted coordinate out of range");
    if (j == root_) return copy;
    Vertex rank = j < root_ ? j : j - 1;
    return static_cast<Vertex>(n1_ + copy * (n2_ - 1) + rank);
  }
  Vertex merged(Vertex copy) const { return id(copy, root_); }
  std::vector<Vertex> copy(Vertex i) const {
    std::vector<Vertex> out;
    for (Vertex j = 0; j < n2_; ++j) out.push_back(id(i, j));
    return out;
  }

 private:
  std::size_t n1_ = 0;
  std::size_t n2_ = 0;
  Vertex root_ = 0;
};

template <typename Map>
struct Built {
  Graph graph;
  Map map;
};

namespace detail {

inline void require_nonempty(const Graph& g1, const Graph& g2, const char* op) {
  if (g1.empty() || g2.empty()) {
    throw InvalidInput(std::string(op) + ": factors must have at least one vertex");
  }
}

// Adjacency rule over coordinate pairs, evaluated for every unordered pair
// of product vertices.
template <typename Rule>
Built<ProductVertexMap> grid_product(const Graph& g1, const Graph& g2, Rule rule) {
  ProductVertexMap map(g1.vertex_count(), g2.vertex_count());
  std::vector<Edge> edges;
  const auto total = static_cast<Vertex>(map.size());
  for (Vertex a = 0; a < total; ++a) {
    auto [u1, u2] = map.coords(a);
    for (Vertex b = a + 1; b < total; ++b) {
      auto [v1, v2] = map.coords(b);
      if (rule(u1, u2, v1, v2)) edges.emplace_back(a, b);
    }
  }
  return {Graph(map.size(), std::move(edges), kAllowIsolated), map};
}

}  // namespace detail

// (u1,u2) ~ (v1,v2) iff one coordinate is equal and the other adjacent.
inline Built<ProductVertexMap> cartesian_product(const Graph& g1, const Graph& g2) {
  detail::require_nonempty(g1, g2, "cartesian_product");
  return detail::grid_product(g1, g2, [&](Vertex u1, Vertex u2, Vertex v1, Vertex v2) {
    return (u1 == v1 && g2.adjacent(u2, v2)) || (u2 == v2 && g1.adjacent(u1, v1));
  });
}

// Both coordinates adjacent. Often disconnected.
inline Built<ProductVertexMap> direct_product(const Graph& g1, const Graph& g2) {
  detail::require_nonempty(g1, g2, "direct_product");
  return detail::grid_product(g1, g2, [&](Vertex u1, Vertex u2, Vertex v1, Vertex v2) {
    return g1.adjacent(u1, v1) && g2.adjacent(u2, v2);
  });
}

inline Built<ProductVertexMap> strong_product(const Graph& g1, const Graph& g2) {
  detail::require_nonempty(g1, g2, "strong_product");
  return detail::grid_product(g1, g2, [&](Vertex u1, Vertex u2, Vertex v1, Vertex v2) {
    const bool eq1 = u1 == v1, eq2 = u2 == v2;
    const bool adj1 = g1.adjacent(u1, v1), adj2 = g2.adjacent(u2, v2);
    return (adj1 && eq2) || (eq1 && adj2) || (adj1 && adj2);
  });
}

// Lexicographic product (composition): not commutative.
inline Built<ProductVertexMap> lexicographic_product(const Graph& g1, const Graph& g2) {
  detail::require_nonempty(g1, g2, "lexicographic_product");
  return detail::grid_product(g1, g2, [&](Vertex u1, Vertex u2, Vertex v1, Vertex v2) {
    return g1.adjacent(u1, v1) || (u1 == v1 && g2.adjacent(u2, v2));
  });
}

inline Built<CoronaVertexMap> corona(const Graph& g1, const Graph& g2) {
  detail::require_nonempty(g1, g2, "corona");
  CoronaVertexMap map(g1.vertex_count(), g2.vertex_count());
  std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
  for (Vertex i = 0; i < g1.vertex_count(); ++i) {
    for (const Edge& e : g2.edges()) {
      edges.emplace_back(map.copy_vertex(i, e.u), map.copy_vertex(i, e.v));
    }
    for (Vertex j = 0; j < g2.vertex_count(); ++j) {
      edges.emplace_back(map.center(i), map.copy_vertex(i, j));
    }
  }
  return {Graph(map.size(), std::move(edges), kAllowIsolated), map};
}

inline Built<RootedVertexMap> rooted_product(const Graph& g1, const Graph& g2, Vertex root) {
  if (!g2.contains(root)) {
    throw InvalidInput("rooted_product: root " + std::to_string(root) + " is not a vertex of g2");
  }
  RootedVertexMap map(g1.vertex_count(), g2.vertex_count(), root);
  std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
  for (Vertex i = 0; i < g1.vertex_count(); ++i) {
    for (const Edge& e : g2.edges()) edges.emplace_back(map.id(i, e.u), map.id(i, e.v));
  }
  return {Graph(map.size(), std::move(edges), kAllowIsolated), map};
}

// Vertices of g2 are shifted up by |V(g1)|.
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const auto shift = static_cast<Vertex>(g1.vertex_count());
  std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
  for (const Edge& e : g2.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  return Graph(g1.vertex_count() + g2.vertex_count(), std::move(edges), kAllowIsolated);
}

struct Layer {
  Graph graph;
  // vertices[k] is the product vertex that became vertex k of `graph`.
  std::vector<Vertex> vertices;
};

enum class Factor { First = 1, Second = 2 };

/// Subgraph of a product induced by one copy of a factor.
///
/// Factor::First fixes the g2-coordinate at `index` and yields the copy of
/// g1 {(i, index)}; Factor::Second fixes the g1-coordinate and yields
/// {(index, j)}. Vertex k of the layer is factor vertex k.
inline Layer restrict_to_layer(const Graph& product, const ProductVertexMap& map, Factor factor,
                               Vertex index) {
  if (product.vertex_count() != map.size()) {
    throw InvalidInput("restrict_to_layer: map does not describe this product");
  }
  std::vector<Vertex> vertices;
  if (factor == Factor::First) {
    if (index >= map.n2()) throw InvalidInput("restrict_to_layer: layer index out of range");
    for (Vertex i = 0; i < map.n1(); ++i) vertices.push_back(map.id(i, index));
  } else {
    if (index >= map.n1()) throw InvalidInput("restrict_to_layer: layer index out of range");
    for (Vertex j = 0; j < map.n2(); ++j) vertices.push_back(map.id(index, j));
  }
  Graph layer = induced_subgraph(product, vertices);
  return {std::move(layer), std::move(vertices)};
}

}  // namespace weakiasi
