#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <vector>

#include "weakiasi/graph.hpp"

namespace weakiasi {

/// Outcome of a two-colouring attempt.
///
/// When `bipartite` holds, `side[v]` is 0 or 1 for every vertex and no edge
/// joins equal sides. Otherwise `odd_cycle` lists the vertices of an odd
/// cycle in traversal order (consecutive entries and last/first adjacent).
struct BipartiteCheck {
  bool bipartite = true;
  std::vector<std::uint8_t> side;
  std::vector<Vertex> odd_cycle;

  std::vector<Vertex> part(std::uint8_t which) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < side.size(); ++v)
      if (side[v] == which) out.push_back(v);
    return out;
  }
};

inline BipartiteCheck check_bipartite(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr Vertex kNone = static_cast<Vertex>(-1);
  BipartiteCheck result;
  result.side.assign(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<Vertex> parent(n, kNone);
  std::vector<std::size_t> depth(n, 0);

  for (Vertex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    std::queue<Vertex> queue;
    queue.push(start);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          parent[w] = v;
          depth[w] = depth[v] + 1;
          result.side[w] = static_cast<std::uint8_t>(1 - result.side[v]);
          queue.push(w);
        } else if (result.side[w] == result.side[v]) {
          // Both tree paths up to the common ancestor plus the edge vw.
          std::vector<Vertex> left{v}, right{w};
          Vertex a = v, b = w;
          while (a != b) {
            if (depth[a] >= depth[b]) {
              a = parent[a];
              left.push_back(a);
            } else {
              b = parent[b];
              right.push_back(b);
            }
          }
          right.pop_back();  // common ancestor already ends `left`
          std::reverse(right.begin(), right.end());
          left.insert(left.end(), right.begin(), right.end());
          result.bipartite = false;
          result.side.clear();
          result.odd_cycle = std::move(left);
          return result;
        }
      }
    }
  }
  return result;
}

inline bool is_bipartite(const Graph& g) { return check_bipartite(g).bipartite; }

}  // namespace weakiasi
