#pragma once

#include <stdexcept>
#include <string>

namespace tyinv {

/// Malformed or out-of-contract input (bad literal, ill-defined gram entry, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation that requires a nondegenerate form received a degenerate one.
class DegenerateForm : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// The input group is outside the supported class (e.g. a 2-group for the
/// odd-prime closed formulas).
class UnsupportedGroup : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// An enumeration would exceed its configured size bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A post-condition guard fired. Signals a bug, never bad input.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tyinv
