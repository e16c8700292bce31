#include "ketsim/format.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstring>

namespace ketsim {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::syntax: return "syntax";
    case ErrorKind::unknown_gate: return "unknown-gate";
    case ErrorKind::arity_mismatch: return "arity-mismatch";
    case ErrorKind::duplicate_qubit: return "duplicate-qubit";
    case ErrorKind::bad_qubit: return "bad-qubit";
    case ErrorKind::bad_matrix_shape: return "bad-matrix-shape";
    case ErrorKind::bad_complex_literal: return "bad-complex-literal";
    case ErrorKind::duplicate_definition: return "duplicate-definition";
  }
  return "unknown";
}

namespace {

std::string describe(const SourceError& err) {
  std::string s;
  if (err.line > 0) {
    s = std::to_string(err.line) + ":" + std::to_string(err.column) + ": ";
  }
  s += error_kind_name(err.kind);
  s += ": ";
  s += err.message;
  if (!err.offending.empty()) {
    s += " '";
    s += err.offending;
    s += "'";
  }
  return s;
}

}  // namespace

ParseError::ParseError(SourceError err) : Error(describe(err)), err_(std::move(err)) {}

ResolveError::ResolveError(std::string message, int line)
    : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string format_complex(cdouble value) {
  std::string s = format_double(value.real());
  double im = value.imag();
  if (std::signbit(im) && !std::isnan(im)) {
    s += '-';
    s += format_double(-im);
  } else {
    s += '+';
    s += format_double(im);
  }
  s += 'i';
  return s;
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Lexes an unsigned decimal float ("12", "0.5", ".25", "1e-3") at p.
// Returns p when nothing matches.
const char* lex_unsigned_float(const char* p, const char* end) {
  const char* q = p;
  bool mantissa = false;
  while (q < end && is_digit(*q)) {
    ++q;
    mantissa = true;
  }
  if (q < end && *q == '.') {
    const char* r = q + 1;
    bool frac = false;
    while (r < end && is_digit(*r)) {
      ++r;
      frac = true;
    }
    if (mantissa || frac) {
      q = r;
      mantissa = true;
    }
  }
  if (!mantissa) return p;
  if (q < end && (*q == 'e' || *q == 'E')) {
    const char* r = q + 1;
    if (r < end && (*r == '+' || *r == '-')) ++r;
    bool digits = false;
    while (r < end && is_digit(*r)) {
      ++r;
      digits = true;
    }
    if (digits) q = r;  // otherwise the 'e' belongs to whatever follows
  }
  return q;
}

}  // namespace

std::optional<cdouble> parse_complex_literal(std::string_view text) {
  const char* p = text.data();
  const char* end = p + text.size();
  if (p == end) return std::nullopt;

  // One signed term: [+-]? float? 'i'?  A bare sign is only meaningful
  // directly in front of 'i' ("-i" means -1i).
  struct Term {
    double value = 0;
    bool imaginary = false;
    bool ok = false;
  };
  auto read_term = [&](bool sign_required) -> Term {
    Term t;
    double sign = 1.0;
    bool saw_sign = false;
    if (p < end && (*p == '+' || *p == '-')) {
      if (*p == '-') sign = -1.0;
      ++p;
      saw_sign = true;
    }
    if (sign_required && !saw_sign) return t;
    const char* q = lex_unsigned_float(p, end);
    double magnitude = 1.0;
    bool has_magnitude = q != p;
    if (has_magnitude) {
      auto res = std::from_chars(p, q, magnitude);
      if (res.ec != std::errc{} || res.ptr != q) return t;
      p = q;
    }
    if (p < end && *p == 'i') {
      ++p;
      t.imaginary = true;
    } else if (!has_magnitude) {
      return t;  // a sign with neither digits nor 'i'
    }
    t.value = sign * magnitude;
    t.ok = true;
    return t;
  };

  Term first = read_term(false);
  if (!first.ok) return std::nullopt;
  double re = first.imaginary ? 0.0 : first.value;
  double im = first.imaginary ? first.value : 0.0;
  if (p != end) {
    if (first.imaginary) return std::nullopt;  // "2i+1" is not accepted
    Term second = read_term(true);
    if (!second.ok || !second.imaginary || p != end) return std::nullopt;
    im = second.value;
  }
  return cdouble{re, im};
}

}  // namespace ketsim
