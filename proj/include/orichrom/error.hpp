#pragma once

#include <stdexcept>
#include <string>

namespace orichrom {

/// Precondition violated by a caller-supplied argument (bad size, malformed map, ...).
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration or search limit would be exceeded. Never a wrong answer, always this.
class CapExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph6 / digraph6 / family text.
class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A digraph with a pair of opposite arcs was offered where an oriented graph is required.
class AntisymmetryError : public FormatError {
  public:
    using FormatError::FormatError;
};

/// A construction found that one of its structural premises does not hold on the given input
/// (e.g. two arcs demanding opposite values for the same coordinate).
class PremiseViolation : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace orichrom
