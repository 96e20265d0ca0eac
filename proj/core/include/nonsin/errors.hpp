#ifndef NONSIN_ERRORS_HPP
#define NONSIN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nonsin {

/// Syntax error in the expression or piecewise DSL.  `offset` is the
/// 0-based byte position in the input; `expected` names the token set the
/// parser would have accepted there.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t offset, std::string expected)
      : std::runtime_error(message + " at byte " + std::to_string(offset) +
                           " (expected " + expected + ")"),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

/// Evaluation outside an expression's domain (ln of non-positive values,
/// sqrt of negatives, division by zero, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numeric failure: quadrature non-convergence, non-finite intermediate.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violated operation precondition (missing generator parity, singular
/// leading coefficient, interval mismatch, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nonsin

#endif  // NONSIN_ERRORS_HPP
