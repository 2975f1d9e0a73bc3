#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two congruences cannot be satisfied simultaneously. Indices refer to the
/// first conflicting pair of equations in the input system.
class InconsistentSystem : public Error {
 public:
  InconsistentSystem(std::size_t i, std::size_t j)
      : Error("inconsistent congruence system: equations " + std::to_string(i) +
              " and " + std::to_string(j) + " conflict"),
        first(i),
        second(j) {}
  std::size_t first;
  std::size_t second;
};

/// QP reduction left some row or column with product 1, so no forest can be
/// built from the result.
class DegenerateRowOrColumn : public Error {
 public:
  explicit DegenerateRowOrColumn(const std::string& what) : Error(what) {}
};

/// A companion block was found but intersects the given x-run.
class OverlappingRuns : public Error {
 public:
  explicit OverlappingRuns(const std::string& what) : Error(what) {}
};

}  // namespace hf
