#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weakiasi/bipartite.hpp"
#include "weakiasi/graph.hpp"
#include "weakiasi/products.hpp"

namespace weakiasi {

// A weak IASI needs a singleton end on every edge, so the non-singleton
// vertices form an independent set S and the mono-indexed edges are exactly
// the edges missing S. The sparing number is therefore
//   m - max { sum of deg(v) over v in S : S independent }.

enum class SparingMethod {
  ExactOracle,
  FormulaComplete,
  FormulaBipartite,
  FormulaCycle,
  FormulaCorona,
};

inline std::string_view to_string(SparingMethod m) {
  switch (m) {
    case SparingMethod::ExactOracle: return "exact-oracle";
    case SparingMethod::FormulaComplete: return "formula-complete";
    case SparingMethod::FormulaBipartite: return "formula-bipartite";
    case SparingMethod::FormulaCycle: return "formula-cycle";
    case SparingMethod::FormulaCorona: return "formula-corona";
  }
  return "unknown";
}

struct SparingResult {
  std::size_t value = 0;
  std::vector<Vertex> witness;  // sorted; the vertices given non-singleton labels
  SparingMethod method = SparingMethod::ExactOracle;
  std::optional<std::size_t> formula_value;
};

inline constexpr std::size_t kDefaultOracleBound = 24;
// Candidate sets are 64-bit masks.
inline constexpr std::size_t kMaxOracleBound = 64;

// Edges of g with no endpoint in `set`. Throws unless `set` is independent.
inline std::size_t mono_edges_for_witness(const Graph& g, std::span<const Vertex> set) {
  if (!is_independent(g, set)) throw InvalidInput("witness is not an independent set");
  std::vector<bool> in(g.vertex_count(), false);
  for (Vertex v : set) {
    if (!g.contains(v)) throw InvalidInput("witness vertex out of range");
    in[v] = true;
  }
  std::size_t uncovered = 0;
  for (const Edge& e : g.edges())
    if (!in[e.u] && !in[e.v]) ++uncovered;
  return uncovered;
}

namespace detail {

using Mask = std::uint64_t;

inline Mask bit(Vertex v) { return Mask{1} << v; }

/// Maximum-weight independent set restricted to candidate masks, weights =
/// degrees. Branching vertex: highest degree among candidates (ties to the
/// lower index). Bound: current weight plus all remaining candidate weight.
class CoverageSearch {
 public:
  explicit CoverageSearch(const Graph& g) : n_(g.vertex_count()), weight_(n_), closed_(n_) {
    for (Vertex v = 0; v < n_; ++v) {
      weight_[v] = g.degree(v);
      closed_[v] = bit(v);
      for (Vertex w : g.neighbors(v)) closed_[v] |= bit(w);
    }
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return weight_[a] > weight_[b]; });
  }

  std::size_t weight(Vertex v) const { return weight_[v]; }
  Mask closed_neighborhood(Vertex v) const { return closed_[v]; }

  Mask all() const { return n_ == 64 ? ~Mask{0} : (bit(static_cast<Vertex>(n_)) - 1); }

  // Best weight reachable from `candidates`, or `floor` if nothing beats it.
  std::size_t best(Mask candidates, std::size_t floor) {
    best_ = floor;
    branch(candidates, 0);
    return best_;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::size_t mass(Mask m) const {
    std::size_t total = 0;
    while (m) {
      total += weight_[std::countr_zero(m)];
      m &= m - 1;
    }
    return total;
  }

  void branch(Mask candidates, std::size_t current) {
    ++nodes_;
    if (current > best_) best_ = current;
    if (candidates == 0 || current + mass(candidates) <= best_) return;
    Vertex pick = 0;
    for (Vertex v : order_) {
      if (candidates & bit(v)) {
        pick = v;
        break;
      }
    }
    branch(candidates & ~closed_[pick], current + weight_[pick]);
    branch(candidates & ~bit(pick), current);
  }

  std::size_t n_;
  std::vector<std::size_t> weight_;
  std::vector<Mask> closed_;
  std::vector<Vertex> order_;
  std::size_t best_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Oracle bound from WEAKIASI_ORACLE_BOUND, falling back to the default.
inline std::size_t oracle_bound_from_env() {
  if (const char* env = std::getenv("WEAKIASI_ORACLE_BOUND")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return kDefaultOracleBound;
}

/// Exact sparing number by branch and bound over independent sets.
///
/// The witness is the lexicographically smallest optimal independent set
/// (as a sorted vertex sequence). It is built one vertex at a time: a prefix
/// is returned as soon as it is optimal on its own, otherwise it is extended
/// by the smallest admissible vertex from which the optimum is still
/// reachable.
inline SparingResult sparing_exact(const Graph& g, std::size_t bound = kDefaultOracleBound) {
  if (bound > kMaxOracleBound) {
    throw InvalidInput("oracle bound " + std::to_string(bound) + " exceeds the supported maximum " +
                       std::to_string(kMaxOracleBound));
  }
  const std::size_t n = g.vertex_count();
  if (n > bound) throw CapacityError(n, bound);

  detail::CoverageSearch search(g);
  const std::size_t optimum = search.best(search.all(), 0);

  std::vector<Vertex> prefix;
  detail::Mask allowed = search.all();  // vertices not adjacent to the prefix
  std::size_t have = 0;
  Vertex next = 0;
  while (have < optimum) {
    bool extended = false;
    for (Vertex v = next; v < n; ++v) {
      if (!(allowed & detail::bit(v))) continue;
      const std::size_t with_v = have + search.weight(v);
      // Candidates after v only, so the sequence stays sorted.
      detail::Mask after = allowed & ~search.closed_neighborhood(v) &
                           ~((detail::bit(v) << 1) - 1);
      if (with_v >= optimum ||
          with_v + search.best(after, optimum - with_v - 1) >= optimum) {
        prefix.push_back(v);
        have = with_v;
        allowed = after;
        next = v + 1;
        extended = true;
        break;
      }
    }
    if (!extended) break;  // unreachable: the optimum is attained by some set
  }

  SparingResult result;
  result.value = g.edge_count() - optimum;
  result.witness = std::move(prefix);
  result.method = SparingMethod::ExactOracle;
  return result;
}

// (n-1)(n-2)/2 mono-indexed edges for K_n.
inline std::size_t sparing_formula_complete(std::size_t n) {
  if (n == 0) throw InvalidInput("sparing_formula_complete: n must be at least 1");
  return (n - 1) * (n - 2) / 2;
}

// 0 for even cycles, 1 for odd ones.
inline std::size_t sparing_formula_cycle(std::size_t n) {
  if (n < 3) throw InvalidInput("sparing_formula_cycle: a cycle has at least 3 vertices");
  return n % 2;
}

/// Mono-edge count claimed for g1 (.) g2 by the corona construction, in terms
/// of |V(g1)|, |E(g2)| and the mono-indexed vertex counts r1, r2 of the
/// factor labelings.
inline std::size_t sparing_formula_corona(std::size_t n1, std::size_t m2, std::size_t r1,
                                          std::size_t r2) {
  if (r1 > n1) throw InvalidInput("sparing_formula_corona: r1 exceeds n1");
  return r1 * (1 + r2) + (n1 - r1) * m2;
}

struct CycleParity {
  std::size_t mono_edges = 0;
  bool odd = false;
};

// Mono-edge count of C_n when s pairwise non-adjacent vertices are non-singleton.
inline CycleParity cycle_parity_of(std::size_t n, std::size_t s) {
  if (n < 3) throw InvalidInput("cycle_parity_of: a cycle has at least 3 vertices");
  if (s > n / 2) throw InvalidInput("cycle_parity_of: C_n has no independent set of that size");
  const std::size_t mono = n - 2 * s;
  return {mono, mono % 2 == 1};
}

inline std::size_t sparing_union(const Graph& g1, const Graph& g2,
                                 std::size_t bound = kDefaultOracleBound) {
  return sparing_exact(g1, bound).value + sparing_exact(g2, bound).value;
}

/// Closed-form value with a witness for the families that have one
/// (bipartite graphs, cycles, complete graphs); nullopt otherwise. Works
/// beyond the oracle bound.
inline std::optional<SparingResult> sparing_closed_form(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (auto bp = check_bipartite(g); bp.bipartite) {
    SparingResult r;
    r.value = 0;
    r.witness = bp.part(0);
    r.method = SparingMethod::FormulaBipartite;
    r.formula_value = 0;
    return r;
  }
  if (is_cycle(g)) {
    // Odd here. Walk the cycle from 0 and take every second vertex.
    std::vector<Vertex> walk{0};
    Vertex prev = 0, cur = g.neighbors(0)[0];
    while (cur != 0) {
      walk.push_back(cur);
      auto nb = g.neighbors(cur);
      Vertex nxt = nb[0] != prev ? nb[0] : nb[1];
      prev = cur;
      cur = nxt;
    }
    SparingResult r;
    for (std::size_t k = 0; k + 1 < n; k += 2) r.witness.push_back(walk[k]);
    std::sort(r.witness.begin(), r.witness.end());
    r.value = sparing_formula_cycle(n);
    r.method = SparingMethod::FormulaCycle;
    r.formula_value = r.value;
    return r;
  }
  if (is_complete(g)) {
    SparingResult r;
    r.value = sparing_formula_complete(n);
    r.witness = {0};
    r.method = SparingMethod::FormulaComplete;
    r.formula_value = r.value;
    return r;
  }
  return std::nullopt;
}

}  // namespace weakiasi
