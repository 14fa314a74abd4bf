#pragma once

#include <stdexcept>
#include <string>

namespace curvegrp {

// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text, out-of-range parameters, unknown generators.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A computation hit one of its hard limits: integer overflow, search-space
// guard, table-size cap.
class ComputationLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace curvegrp
