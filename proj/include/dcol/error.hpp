#pragma once

#include <stdexcept>
#include <string>

namespace dcol {

/// Bad input: malformed graph, non-partition, improper seed coloring, bad parameters.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A safety cap (clique count, oracle size, round budget) was exceeded.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural bound that must hold by construction did not. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dcol
