#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fvc {

/// Argument outside the mathematical domain of an operation.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Evaluation at a pole (Gamma at a non-positive integer, 2F1 with bad c).
struct PoleError : DomainError {
  using DomainError::DomainError;
};

/// Result exceeds the representable double range.
struct OverflowError : std::range_error {
  using std::range_error::range_error;
};

/// Malformed interval or grid request.
struct InvalidRangeError : DomainError {
  using DomainError::DomainError;
};

/// A field value violates a strict-positivity precondition.
struct PositivityError : DomainError {
  PositivityError(const std::string& what, std::size_t offending_index)
      : DomainError(what), index(offending_index) {}
  std::size_t index;
};

/// Variation does not vanish at the grid endpoints.
struct BoundaryError : DomainError {
  using DomainError::DomainError;
};

/// Successive refinements of a numerical scheme failed to agree.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Density expression rejected by the parser.
struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, std::size_t byte_offset,
             std::string expected_token)
      : std::invalid_argument(what),
        offset(byte_offset),
        expected(std::move(expected_token)) {}
  std::size_t offset;
  std::string expected;
};

}  // namespace fvc
