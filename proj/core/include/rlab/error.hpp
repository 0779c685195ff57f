#pragma once

#include <stdexcept>
#include <string>

namespace rlab {

/// Invalid input: malformed data, violated preconditions, unknown kinds.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical procedure failed to reach its contracted accuracy.
class ComputationError : public std::runtime_error {
 public:
  explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rlab
