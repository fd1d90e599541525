#pragma once

#include <stdexcept>
#include <string>

namespace metriclie {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structurally invalid input (non-symmetric gram, bad file contents, ...).
struct MalformedInputError : Error {
  using Error::Error;
};

/// A nondegenerate bilinear form was required but the one supplied is singular.
struct DegenerateMetricError : Error {
  using Error::Error;
};

/// An operation precondition does not hold (non-associative product, invalid ideal, ...).
struct PreconditionError : Error {
  using Error::Error;
};

/// Numeric integration left the trusted region (non-finite value or norm beyond threshold).
struct BlowupError : Error {
  double last_finite_time;
  BlowupError(const std::string& what, double t) : Error(what), last_finite_time(t) {}
};

}  // namespace metriclie
