#pragma once

#include <stdexcept>
#include <string>

namespace crossout {

// Malformed input: not a permutation, not a Dyck path, wrong sizes.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input that breaks a bound, e.g. a label above its height.
class ConstraintViolation : public std::domain_error {
 public:
  ConstraintViolation(const std::string& what, int index)
      : std::domain_error(what), index_(index) {}

  /// 1-based index of the offending entry.
  int index() const noexcept { return index_; }

 private:
  int index_;
};

// Exhaustive sweep refused because the size exceeds the guard limit.
class GuardLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Game operation invoked in the wrong state (game over, not engine's turn).
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Illegal move: position not among the remaining morsels.
class MoveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace crossout
