#pragma once

#include <stdexcept>
#include <string>

namespace okbody {

// Malformed input: bad arity, unparsable rational, invalid order, ...
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A configured cap (dimension of L^k, lattice point count) was exceeded.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Mathematical precondition violated: zero polynomial, degenerate body, ...
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace okbody
