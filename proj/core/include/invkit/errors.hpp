#ifndef INVKIT_ERRORS_HPP
#define INVKIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace invkit {

enum class ErrorKind {
  RingMismatch,             // operands live in different rings / orders
  Grammar,                  // expression text violates the input grammar
  InvalidInput,             // structurally valid but semantically inadmissible
  ResourceLimit,            // configured computation budget exceeded
  ChartError,               // element is not a unit of the chosen chart
  Inseparable,              // char-p multiplicity divisible by p
  NotWellDefined,           // map/derivation fails its defining relations
  FactorizationIncomplete,  // factor lacks an irreducibility assertion
  HypothesisViolation,      // input violates a pipeline hypothesis
  Unsupported,              // shape outside the implemented fragment
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(ErrorKind::Grammar, msg), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) {
  throw Error(k, msg);
}

}  // namespace invkit

#endif
