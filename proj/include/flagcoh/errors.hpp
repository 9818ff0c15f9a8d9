#pragma once

#include <stdexcept>
#include <string>

namespace flagcoh {

// Malformed or out-of-range user input (bad type/rank, bad JSON, x0 off the chamber).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured size bound (group order, degree cap) would be exceeded.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact identity that must hold by construction failed, e.g. a nonzero
// remainder after dividing by a root. Always a bug, never a user error.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace flagcoh
