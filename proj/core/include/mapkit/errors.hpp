#ifndef MAPKIT_ERRORS_HPP
#define MAPKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mapkit {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Lexical or syntactic problem in a theory/query source.
struct ParseError : Error {
  int line = 0;
  int column = 0;
  ParseError(const std::string& msg, int l, int c)
      : Error(msg + " (line " + std::to_string(l) + ", column " + std::to_string(c) + ")"),
        line(l),
        column(c) {}
};

// Name not declared in the signature, or declared twice.
struct SignatureError : Error {
  using Error::Error;
};

// Theory invariant violated (action categories, multiplicities, ...).
struct ValidationError : Error {
  using Error::Error;
};

// Bad operand to a structure operator (unknown world id, colliding replica ids, ...).
struct ArgumentError : Error {
  using Error::Error;
};

// union_k over structures whose shared worlds disagree on a valuation.
struct CompatibilityError : Error {
  using Error::Error;
};

// 2^|F| enumeration guard exceeded.
struct CapacityError : Error {
  using Error::Error;
};

// F and P overlap for one action occurrence.
struct ObservabilityError : Error {
  using Error::Error;
};

// Per-world effect set contains a literal and its complement.
struct EffectConsistencyError : Error {
  using Error::Error;
};

// Initial statements outside the definite forms.
struct DefinitenessError : Error {
  using Error::Error;
};

// The initial statements have no model of the canonical shape.
struct InconsistencyError : Error {
  using Error::Error;
};

// Update-model construction asked for an unsupported action shape.
struct UnsupportedShapeError : Error {
  using Error::Error;
};

}  // namespace mapkit

#endif
