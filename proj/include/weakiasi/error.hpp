#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weakiasi {

// Malformed input: bad vertex ids, partial labelings, violated preconditions.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The exact sparing search refuses graphs above its configured vertex bound.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(std::size_t vertices, std::size_t bound)
      : std::runtime_error("graph has " + std::to_string(vertices) +
                           " vertices, exact search bound is " + std::to_string(bound)),
        vertices_(vertices),
        bound_(bound) {}

  std::size_t vertices() const noexcept { return vertices_; }
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t vertices_;
  std::size_t bound_;
};

}  // namespace weakiasi
