#pragma once

#include <stdexcept>
#include <string>

namespace stlab {

// Bad user input: inadmissible system, malformed weight, out-of-range index.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called outside its precondition (e.g. a singular weight
// handed to to_dominant).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A size guard tripped (group order, term count, coordinate overflow).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic that is exact by construction came out inexact. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace stlab
