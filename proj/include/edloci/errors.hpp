#ifndef EDLOCI_ERRORS_HPP
#define EDLOCI_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace edloci {

/// Caller passed arguments that violate an operation's precondition
/// (mismatched rings, negative powers, out-of-range indices, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed polynomial or input-file text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(format(msg, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& msg, int line, int column) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg;
  }
  int line_;
  int column_;
};

/// Input is well-formed but outside the domain of a pipeline command,
/// e.g. a non-homogeneous generator or the unit ideal.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// quotient_dimension() on a positive-dimensional ideal.
class DimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A random data point landed on a special locus (fiber not finite, or
/// two seeds disagree) and all retries were exhausted.
class GenericityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Resource cap hit inside a Groebner computation. Carries what had been
/// consumed at the moment of the abort.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t pairs_used, double seconds_used)
      : std::runtime_error(what), pairs_used_(pairs_used), seconds_used_(seconds_used) {}

  std::uint64_t pairs_used() const { return pairs_used_; }
  double seconds_used() const { return seconds_used_; }

 private:
  std::uint64_t pairs_used_;
  double seconds_used_;
};

}  // namespace edloci

#endif  // EDLOCI_ERRORS_HPP
