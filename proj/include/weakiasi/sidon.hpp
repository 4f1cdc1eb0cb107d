#pragma once

#include <cstdint>
#include <mutex>
#include <unordered_set>
#include <vector>

namespace weakiasi {

/// First `count` terms of the Mian-Chowla sequence 1, 2, 4, 8, 13, 21, 31, ...
/// Greedy: each term is the smallest integer keeping all pairwise sums
/// a_i + a_j (i <= j) distinct. Terms are cached process-wide; the cache only
/// ever grows.
inline std::vector<std::uint64_t> sidon_prefix(std::size_t count) {
  static std::mutex mutex;
  static std::vector<std::uint64_t> terms;
  static std::unordered_set<std::uint64_t> sums;

  std::lock_guard lock(mutex);
  while (terms.size() < count) {
    std::uint64_t candidate = terms.empty() ? 1 : terms.back() + 1;
    for (;; ++candidate) {
      bool clash = sums.contains(2 * candidate);
      for (std::size_t k = 0; !clash && k < terms.size(); ++k) clash = sums.contains(terms[k] + candidate);
      if (!clash) break;
    }
    for (std::uint64_t t : terms) sums.insert(t + candidate);
    sums.insert(2 * candidate);
    terms.push_back(candidate);
  }
  return {terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(count)};
}

}  // namespace weakiasi
