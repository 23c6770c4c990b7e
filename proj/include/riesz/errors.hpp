#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace riesz {

// Base class for everything this library throws on contract violations.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operands live over different ambient spaces (sizes or weights disagree).
struct SpaceMismatchError : Error {
  using Error::Error;
};

// Exact root requested but the result is not rational.
struct NonRationalRootError : Error {
  using Error::Error;
};

// Fractional power of a negative entry.
struct NegativeBaseError : Error {
  using Error::Error;
};

// A value table fails finite additivity. Witness pair of disjoint
// components as bit masks over the underlying points.
struct NotAdditiveError : Error {
  NotAdditiveError(const std::string& what, std::uint64_t p, std::uint64_t q)
      : Error(what), witness_p(p), witness_q(q) {}
  std::uint64_t witness_p;
  std::uint64_t witness_q;
};

// A value table does not cover every component.
struct MissingComponentError : Error {
  using Error::Error;
};

// Request would enumerate more states than the guard allows.
struct TooLargeError : Error {
  using Error::Error;
};

// Charge fails absolute continuity with respect to the averaging
// operator; witness component as a bit mask.
struct NotAbsolutelyContinuousError : Error {
  NotAbsolutelyContinuousError(const std::string& what, std::uint64_t p)
      : Error(what), witness(p) {}
  std::uint64_t witness;
};

// Functional is not homogeneous over the operator range.
struct NotHomogeneousError : Error {
  using Error::Error;
};

// Operation is defined but deliberately not provided for this input kind.
struct UnsupportedError : Error {
  using Error::Error;
};

// Construction input violates a type invariant.
struct ValidationError : Error {
  using Error::Error;
};

// Malformed model description text. line is 1-based, 0 when unknown.
struct ParseError : Error {
  ParseError(const std::string& what, int line_no = 0)
      : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what
                          : what),
        line(line_no) {}
  int line;
};

}  // namespace riesz
