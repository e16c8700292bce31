#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ketsim {

using cdouble = std::complex<double>;

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ErrorKind {
  syntax,
  unknown_gate,
  arity_mismatch,
  duplicate_qubit,
  bad_qubit,
  bad_matrix_shape,
  bad_complex_literal,
  duplicate_definition,
};

const char* error_kind_name(ErrorKind kind);

// A diagnostic anchored to program text. Lines and columns are 1-based.
struct SourceError {
  int line = 0;
  int column = 0;
  ErrorKind kind = ErrorKind::syntax;
  std::string message;
  std::string offending;  // the token or line the message talks about
};

class ParseError : public Error {
 public:
  explicit ParseError(SourceError err);
  const SourceError& where() const { return err_; }

 private:
  SourceError err_;
};

// Program text was well-formed but cannot be turned into a runnable gate
// sequence (unknown gate, arity mismatch, width/cap violations, ...).
class ResolveError : public Error {
 public:
  explicit ResolveError(std::string message, int line = 0);
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace ketsim
