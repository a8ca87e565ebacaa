#pragma once

#include <stdexcept>
#include <string>

namespace affinelab {

// Raised when an operation is called outside its domain (wrong level, d where
// only affine generators are allowed, non-reduced module, ...).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace affinelab
