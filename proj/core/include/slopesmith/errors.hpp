#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slopesmith {

// Precondition violated by the caller (zero constant, bad (p,q), degenerate polygon, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operands carry different variable labels.
class VariableMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        message_(message),
        position_(position) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string message_;
  std::size_t position_;
};

// A numerical procedure did not reach its tolerance. `achieved` is the best
// error estimate at the point of giving up.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& message, double achieved)
      : std::runtime_error(message), achieved_(achieved) {}

  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

}  // namespace slopesmith
