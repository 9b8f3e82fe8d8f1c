#pragma once

#include <stdexcept>
#include <string>

namespace lpproj {

// Inputs of inconsistent length (points, directions, maps, functions).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A geometric or algebraic precondition does not hold, e.g. an operator
// defined on origin-containing polytopes is applied to one without o.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed textual input (rationals, JSON documents).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lpproj
