#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "weakiasi/graph.hpp"
#include "weakiasi/integer_set.hpp"
#include "weakiasi/labeling.hpp"
#include "weakiasi/products.hpp"
#include "weakiasi/sidon.hpp"
#include "weakiasi/sparing.hpp"

namespace weakiasi {

enum class Provenance { Cartesian, Direct, Strong, Lexicographic, Corona, Rooted, Oracle };

inline std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Cartesian: return "cartesian";
    case Provenance::Direct: return "direct";
    case Provenance::Strong: return "strong";
    case Provenance::Lexicographic: return "lexicographic";
    case Provenance::Corona: return "corona";
    case Provenance::Rooted: return "rooted";
    case Provenance::Oracle: return "oracle";
  }
  return "unknown";
}

/// Which product vertices get non-singleton labels, before any concrete sets
/// are chosen.
struct LabelPlan {
  std::vector<Vertex> non_singleton;  // sorted, independent in the target graph
  Provenance provenance = Provenance::Oracle;
  // Vertices the procedure marked non-singleton that had to be demoted to
  // singleton because a neighbour was already non-singleton.
  std::vector<Vertex> demoted;
  // Labels the procedure prescribes as integral multiples r * f(v) of a factor
  // label. Only their cardinalities feed assign_concrete_sets.
  std::map<Vertex, IntegerSet> scaled;
};

namespace detail {

inline void require_weak(const Graph& g, const Labeling& l, const char* what) {
  if (l.size() != g.vertex_count() || !verify_weak_iasi(g, l).passed) {
    throw InvalidInput(std::string(what) + " is not a weak IASI of its factor");
  }
}

inline std::vector<bool> membership(std::size_t n, std::span<const Vertex> set) {
  std::vector<bool> in(n, false);
  for (Vertex v : set) in[v] = true;
  return in;
}

// Keeps candidates in ascending order unless an already kept neighbour is
// non-singleton.
inline LabelPlan settle(const Graph& g, const std::vector<bool>& wanted, Provenance provenance) {
  LabelPlan plan;
  plan.provenance = provenance;
  std::vector<bool> kept(g.vertex_count(), false);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!wanted[v]) continue;
    bool clash = false;
    for (Vertex w : g.neighbors(v)) clash = clash || kept[w];
    if (clash) {
      plan.demoted.push_back(v);
    } else {
      kept[v] = true;
      plan.non_singleton.push_back(v);
    }
  }
  return plan;
}

// BFS depth parity per component; a proper 2-colouring when g is bipartite.
inline std::vector<std::uint8_t> depth_parity(const Graph& g) {
  std::vector<std::uint8_t> parity(g.vertex_count(), 0);
  std::vector<bool> seen(g.vertex_count(), false);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          parity[w] = static_cast<std::uint8_t>(1 - parity[v]);
          q.push(w);
        }
      }
    }
  }
  return parity;
}

}  // namespace detail

/// Cartesian product g1 [] g2 seen as copies of g1, one per vertex j of g2.
///
/// Copies on the even side of g2 repeat the singleton/non-singleton pattern
/// of l1. Copies on the odd side invert it, except that ends of mono-indexed
/// edges of l1 stay singleton. The sides come from a BFS colouring of g2, so
/// adjacent copies always alternate when g2 is bipartite; otherwise the
/// resulting clashes are demoted.
inline LabelPlan plan_cartesian(const Graph& g1, const Labeling& l1, const Graph& g2) {
  detail::require_weak(g1, l1, "plan_cartesian: l1");
  auto product = cartesian_product(g1, g2);
  const auto& map = product.map;

  std::vector<bool> mono_end(g1.vertex_count(), false);
  for (const Edge& e : mono_indexed_stats(g1, l1).mono_edges) mono_end[e.u] = mono_end[e.v] = true;
  const auto parity = detail::depth_parity(g2);

  std::vector<bool> wanted(map.size(), false);
  for (Vertex i = 0; i < map.n1(); ++i) {
    const bool non_single = !l1[i].is_singleton();
    for (Vertex j = 0; j < map.n2(); ++j) {
      wanted[map.id(i, j)] = parity[j] == 0 ? non_single : (!non_single && !mono_end[i]);
    }
  }
  return detail::settle(product.graph, wanted, Provenance::Cartesian);
}

/// Direct product: no edges inside a copy of V(g1), so every copy j reuses
/// l1's pattern and is prescribed (j+1) * l1.
inline LabelPlan plan_direct(const Graph& g1, const Labeling& l1, const Graph& g2) {
  detail::require_weak(g1, l1, "plan_direct: l1");
  auto product = direct_product(g1, g2);
  const auto& map = product.map;
  std::vector<bool> wanted(map.size(), false);
  std::map<Vertex, IntegerSet> scaled;
  for (Vertex i = 0; i < map.n1(); ++i) {
    for (Vertex j = 0; j < map.n2(); ++j) {
      wanted[map.id(i, j)] = !l1[i].is_singleton();
      scaled.emplace(map.id(i, j), scale_set(j + 1, l1[i]));
    }
  }
  LabelPlan plan = detail::settle(product.graph, wanted, Provenance::Direct);
  plan.scaled = std::move(scaled);
  return plan;
}

/// Strong product, copies of g1 processed in g2 order.
///
/// A copy with no already planned neighbour copy restarts from l1's pattern
/// (prescribed (j+1) * l1). A copy next to planned copies may make vertex i
/// non-singleton only if, in every planned neighbour copy, i and all its
/// g1-neighbours are singleton; l1's non-singleton vertices are tried first,
/// then the rest in index order, keeping the copy independent.
inline LabelPlan plan_strong(const Graph& g1, const Labeling& l1, const Graph& g2) {
  detail::require_weak(g1, l1, "plan_strong: l1");
  auto product = strong_product(g1, g2);
  const auto& map = product.map;
  const auto n1 = static_cast<Vertex>(map.n1());
  const auto n2 = static_cast<Vertex>(map.n2());

  std::vector<bool> wanted(map.size(), false);
  std::map<Vertex, IntegerSet> scaled;
  for (Vertex j = 0; j < n2; ++j) {
    std::vector<Vertex> planned;
    for (Vertex k : g2.neighbors(j))
      if (k < j) planned.push_back(k);

    if (planned.empty()) {
      for (Vertex i = 0; i < n1; ++i) {
        wanted[map.id(i, j)] = !l1[i].is_singleton();
        scaled.emplace(map.id(i, j), scale_set(j + 1, l1[i]));
      }
      continue;
    }

    auto free_in = [&](Vertex i, Vertex k) {
      if (wanted[map.id(i, k)]) return false;
      for (Vertex w : g1.neighbors(i))
        if (wanted[map.id(w, k)]) return false;
      return true;
    };
    std::vector<bool> eligible(n1, false);
    for (Vertex i = 0; i < n1; ++i) {
      eligible[i] = std::all_of(planned.begin(), planned.end(), [&](Vertex k) { return free_in(i, k); });
    }
    auto try_take = [&](Vertex i) {
      if (!eligible[i] || wanted[map.id(i, j)]) return;
      for (Vertex w : g1.neighbors(i))
        if (wanted[map.id(w, j)]) return;
      wanted[map.id(i, j)] = true;
    };
    for (Vertex i = 0; i < n1; ++i)
      if (!l1[i].is_singleton()) try_take(i);
    for (Vertex i = 0; i < n1; ++i) try_take(i);
  }
  LabelPlan plan = detail::settle(product.graph, wanted, Provenance::Strong);
  plan.scaled = std::move(scaled);
  return plan;
}

/// Lexicographic product g1[g2]: copies of g2 over adjacent g1-vertices are
/// completely joined, so only an independent family of g1-vertices may host
/// non-singletons. Hosts are chosen greedily in index order; each host copy
/// i carries l2's pattern, prescribed (i+1) * l2. All other copies are
/// singleton.
inline LabelPlan plan_lexicographic(const Graph& g1, const Graph& g2, const Labeling& l2) {
  detail::require_weak(g2, l2, "plan_lexicographic: l2");
  auto product = lexicographic_product(g1, g2);
  const auto& map = product.map;

  std::vector<bool> host(map.n1(), false);
  for (Vertex i = 0; i < map.n1(); ++i) {
    host[i] = std::none_of(g1.neighbors(i).begin(), g1.neighbors(i).end(),
                           [&](Vertex w) { return host[w]; });
  }
  std::vector<bool> wanted(map.size(), false);
  std::map<Vertex, IntegerSet> scaled;
  for (Vertex i = 0; i < map.n1(); ++i) {
    if (!host[i]) continue;
    for (Vertex j = 0; j < map.n2(); ++j) {
      wanted[map.id(i, j)] = !l2[j].is_singleton();
      scaled.emplace(map.id(i, j), scale_set(i + 1, l2[j]));
    }
  }
  LabelPlan plan = detail::settle(product.graph, wanted, Provenance::Lexicographic);
  plan.scaled = std::move(scaled);
  return plan;
}

/// Corona g1 (.) g2. The centre copy keeps l1's pattern. The copy hanging off
/// a non-singleton centre is all singleton (1-uniform); the copy hanging off
/// a singleton centre i carries l2's pattern, prescribed (i+1) * l2.
inline LabelPlan plan_corona(const Graph& g1, const Labeling& l1, const Graph& g2, const Labeling& l2) {
  detail::require_weak(g1, l1, "plan_corona: l1");
  detail::require_weak(g2, l2, "plan_corona: l2");
  auto product = corona(g1, g2);
  const auto& map = product.map;

  std::vector<bool> wanted(map.size(), false);
  std::map<Vertex, IntegerSet> scaled;
  for (Vertex i = 0; i < map.n1(); ++i) {
    wanted[map.center(i)] = !l1[i].is_singleton();
    scaled.emplace(map.center(i), l1[i]);
    if (!l1[i].is_singleton()) continue;
    for (Vertex j = 0; j < map.n2(); ++j) {
      wanted[map.copy_vertex(i, j)] = !l2[j].is_singleton();
      scaled.emplace(map.copy_vertex(i, j), scale_set(i + 1, l2[j]));
    }
  }
  LabelPlan plan = detail::settle(product.graph, wanted, Provenance::Corona);
  plan.scaled = std::move(scaled);
  return plan;
}

/// Rooted product. Copy r is prescribed (r+1) * l2. The merged vertex keeps
/// l1's label unless that label is non-singleton and the copy's root is
/// singleton, in which case it takes the root's singleton label.
inline LabelPlan plan_rooted(const Graph& g1, const Labeling& l1, const Graph& g2, const Labeling& l2,
                             Vertex root) {
  detail::require_weak(g1, l1, "plan_rooted: l1");
  detail::require_weak(g2, l2, "plan_rooted: l2");
  auto product = rooted_product(g1, g2, root);
  const auto& map = product.map;

  std::vector<bool> wanted(map.size(), false);
  std::map<Vertex, IntegerSet> scaled;
  for (Vertex r = 0; r < map.n1(); ++r) {
    for (Vertex j = 0; j < map.n2(); ++j) {
      if (j == root) continue;
      wanted[map.id(r, j)] = !l2[j].is_singleton();
      scaled.emplace(map.id(r, j), scale_set(r + 1, l2[j]));
    }
    const Vertex merged = map.merged(r);
    if (!l1[r].is_singleton() && l2[root].is_singleton()) {
      scaled.emplace(merged, scale_set(r + 1, l2[root]));
    } else {
      wanted[merged] = !l1[r].is_singleton();
      scaled.emplace(merged, l1[r]);
    }
  }
  LabelPlan plan = detail::settle(product.graph, wanted, Provenance::Rooted);
  plan.scaled = std::move(scaled);
  return plan;
}

inline LabelPlan plan_from_witness(const Graph& g, std::span<const Vertex> witness) {
  std::vector<bool> wanted(g.vertex_count(), false);
  for (Vertex v : witness) {
    if (!g.contains(v)) throw InvalidInput("plan_from_witness: vertex out of range");
    wanted[v] = true;
  }
  return detail::settle(g, wanted, Provenance::Oracle);
}

using SizeMap = std::map<Vertex, std::size_t>;

// Non-singleton sizes taken from the plan's prescribed multiples.
inline SizeMap sizes_from_scaled(const LabelPlan& plan) {
  SizeMap sizes;
  for (Vertex v : plan.non_singleton) {
    auto it = plan.scaled.find(v);
    if (it != plan.scaled.end() && it->second.size() >= 2) sizes[v] = it->second.size();
  }
  return sizes;
}

/// Concrete weak IASI realising a plan.
///
/// Singleton vertex v gets {s_v}, s the Mian-Chowla sequence, so two
/// singleton-singleton edges never share a sum. Non-singleton vertex w gets a
/// run of consecutive integers starting at its own offset; offsets start above
/// every singleton pair sum and are spaced by (size + largest singleton), so
/// the translates A_w + s of different blocks occupy disjoint ranges.
inline Labeling assign_concrete_sets(const Graph& g, const LabelPlan& plan,
                                     const std::optional<SizeMap>& sizes = std::nullopt) {
  const std::size_t n = g.vertex_count();
  for (Vertex v : plan.non_singleton) {
    if (!g.contains(v)) throw InvalidInput("assign_concrete_sets: plan vertex out of range");
  }
  if (!is_independent(g, plan.non_singleton)) {
    throw InvalidInput("assign_concrete_sets: non-singleton vertices are not independent");
  }
  const auto non_single = detail::membership(n, plan.non_singleton);
  if (sizes) {
    for (auto [v, k] : *sizes) {
      if (v >= n || !non_single[v]) {
        throw InvalidInput("assign_concrete_sets: size given for a vertex outside the plan");
      }
      if (k < 2) throw InvalidInput("assign_concrete_sets: non-singleton size must be at least 2");
    }
  }

  const auto sidon = sidon_prefix(n);
  std::uint64_t largest_singleton = 0;
  for (Vertex v = 0; v < n; ++v)
    if (!non_single[v]) largest_singleton = std::max(largest_singleton, sidon[v]);

  std::vector<IntegerSet> labels;
  labels.reserve(n);
  std::uint64_t offset = 2 * largest_singleton + 1;
  for (Vertex v = 0; v < n; ++v) {
    if (!non_single[v]) {
      labels.push_back(IntegerSet::singleton(sidon[v]));
      continue;
    }
    std::size_t k = 2;
    if (sizes) {
      if (auto it = sizes->find(v); it != sizes->end()) k = it->second;
    }
    std::vector<std::uint64_t> block(k);
    for (std::size_t t = 0; t < k; ++t) block[t] = offset + t;
    labels.emplace_back(std::move(block));
    offset += k + largest_singleton;
  }
  return Labeling(std::move(labels));
}

// Weak IASI of g with the fewest mono-indexed edges.
inline Labeling optimal_labeling(const Graph& g, std::size_t bound = kDefaultOracleBound) {
  const SparingResult best = sparing_exact(g, bound);
  return assign_concrete_sets(g, plan_from_witness(g, best.witness));
}

}  // namespace weakiasi
