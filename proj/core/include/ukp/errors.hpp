#pragma once

#include <stdexcept>
#include <string>

namespace ukp {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A caller-supplied parameter is outside its documented domain
/// (e.g. epsilon not in (0,1), nonpositive profit).
struct InvalidParameterError : Error {
  using Error::Error;
};

/// The instance has no usable items (empty input, or everything
/// was filtered out during normalization).
struct EmptyInstanceError : Error {
  using Error::Error;
};

/// A value violates an interval precondition (profit outside the
/// partitioned range).
struct OutOfRangeError : Error {
  using Error::Error;
};

/// Internal invariant breach or resource limit hit inside the solver.
struct SolverError : Error {
  using Error::Error;
};

/// An oracle was asked for more work than its configured budget allows.
struct OracleBudgetError : Error {
  using Error::Error;
};

/// Instance text could not be parsed; carries the 1-based line number.
struct ParseError : Error {
  ParseError(int line_number, const std::string& message)
      : Error("line " + std::to_string(line_number) + ": " + message),
        line(line_number) {}
  int line;
};

}  // namespace ukp
