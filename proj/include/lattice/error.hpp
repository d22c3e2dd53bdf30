#pragma once

#include <stdexcept>
#include <string>

namespace lattice {

// Malformed arguments: dimension mismatch, index out of range, bad modulus.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Geometric hypothesis violated (affinely dependent vertices, overlapping faces).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Enumeration box larger than the configured envelope.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal cross-check failed. Indicates a bug in a counter or interpolator.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lattice
