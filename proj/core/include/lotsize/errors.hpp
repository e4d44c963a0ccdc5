#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lotsize {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class InfeasibilityReason { negative_inventory, capacity_exceeded, no_feasible_chain };

const char* to_string(InfeasibilityReason reason);

/// A plan or instance admits no solution. `period` is 1-based; 0 means the
/// failure is not tied to a single period.
class InfeasibleError : public Error {
 public:
  InfeasibleError(std::size_t period, InfeasibilityReason reason, const std::string& detail = {});

  std::size_t period() const { return period_; }
  InfeasibilityReason reason() const { return reason_; }

 private:
  std::size_t period_;
  InfeasibilityReason reason_;
};

/// Instance or argument fails validation.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// The chosen solver does not apply to this instance (e.g. a learning
/// discount handed to Wagner-Whitin).
class WrongModelError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive search would exceed its configured size limit.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

/// Malformed instance or scenario text.
class ParseError : public InvalidInputError {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace lotsize
