#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "weakiasi/error.hpp"

namespace weakiasi {

/// Finite nonempty set of non-negative integers, stored sorted and
/// duplicate-free. Input order and repeats are normalised away.
class IntegerSet {
 public:
  using value_type = std::uint64_t;

  IntegerSet(std::initializer_list<value_type> values) : IntegerSet(std::vector<value_type>(values)) {}

  explicit IntegerSet(std::vector<value_type> values) : elements_(std::move(values)) {
    if (elements_.empty()) throw InvalidInput("set-label must be nonempty");
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  }

  static IntegerSet singleton(value_type x) { return IntegerSet({x}); }

  std::size_t size() const noexcept { return elements_.size(); }
  bool is_singleton() const noexcept { return elements_.size() == 1; }
  value_type min() const noexcept { return elements_.front(); }
  value_type max() const noexcept { return elements_.back(); }
  std::span<const value_type> elements() const noexcept { return elements_; }
  bool contains(value_type x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  friend bool operator==(const IntegerSet&, const IntegerSet&) = default;
  friend auto operator<=>(const IntegerSet&, const IntegerSet&) = default;

  std::string str() const {
    std::string out = "{";
    for (std::size_t k = 0; k < elements_.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(elements_[k]);
    }
    return out + "}";
  }

 private:
  std::vector<value_type> elements_;
};

// A + B = {a + b}. Pairwise enumeration; labels here are small.
inline IntegerSet sumset(const IntegerSet& a, const IntegerSet& b) {
  constexpr auto kMax = std::numeric_limits<IntegerSet::value_type>::max();
  if (a.max() > kMax - b.max()) throw InvalidInput("sumset overflows 64-bit elements");
  std::vector<IntegerSet::value_type> sums;
  sums.reserve(a.size() * b.size());
  for (auto x : a)
    for (auto y : b) sums.push_back(x + y);
  return IntegerSet(std::move(sums));
}

// r * A, elementwise. r = 0 would collapse every set to {0}.
inline IntegerSet scale_set(std::uint64_t r, const IntegerSet& a) {
  if (r == 0) throw InvalidInput("scale_set: multiplier must be positive");
  if (a.max() > std::numeric_limits<IntegerSet::value_type>::max() / r) {
    throw InvalidInput("scale_set overflows 64-bit elements");
  }
  std::vector<IntegerSet::value_type> out;
  out.reserve(a.size());
  for (auto x : a) out.push_back(r * x);
  return IntegerSet(std::move(out));
}

}  // namespace weakiasi
