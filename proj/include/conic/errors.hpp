#pragma once

#include <stdexcept>
#include <string>

namespace conic {

/// Malformed or unsupported user input. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Z[theta] fails Dedekind's criterion at 2.
class NonMaximalOrderError : public InputError {
 public:
  NonMaximalOrderError() : InputError("order not maximal at 2") {}
};

/// A size bound (polynomial degree, ring degree, search space) was exceeded.
class CapacityError : public InputError {
 public:
  using InputError::InputError;
};

class RingMismatchError : public std::logic_error {
 public:
  RingMismatchError() : std::logic_error("operands belong to different rings") {}
};

class FieldMismatchError : public std::logic_error {
 public:
  FieldMismatchError() : std::logic_error("operands belong to different fields") {}
};

class DivisionByZeroError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Generators do not span a full-rank lattice (the zero ideal, or a
/// degenerate generating set).
class RankDeficientError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace conic
