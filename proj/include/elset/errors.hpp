#pragma once

#include <stdexcept>
#include <string>

namespace elset {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Syntax error in `.lp` / atom-set / DIMACS text. `line` and `column` are
// 1-based and point at the first offending character.
struct ParseError : Error {
  int line;
  int column;
  std::string message;

  ParseError(int line_, int column_, std::string message_)
      : Error(std::to_string(line_) + ":" + std::to_string(column_) + ": " + message_),
        line(line_),
        column(column_),
        message(std::move(message_)) {}
};

struct InvalidAtomName : Error {
  using Error::Error;
};

struct ModeViolation : Error {
  using Error::Error;
};

struct EmptyHeadInNondisjunctive : Error {
  using Error::Error;
};

struct EmptyCandidate : Error {
  using Error::Error;
};

struct UnknownAtom : Error {
  using Error::Error;
};

struct NotALoop : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  using Error::Error;
};

struct EmptySubset : Error {
  using Error::Error;
};

struct NotSubset : Error {
  using Error::Error;
};

struct NotHeadCycleFree : Error {
  using Error::Error;
};

struct NotNondisjunctive : Error {
  using Error::Error;
};

struct NotNontrivialLoop : Error {
  using Error::Error;
};

struct EmptyTarget : Error {
  using Error::Error;
};

struct UniverseTooLarge : Error {
  using Error::Error;
};

struct GenerationExhausted : Error {
  using Error::Error;
};

struct ClauseTooLong : Error {
  using Error::Error;
};

struct TooManyVariables : Error {
  using Error::Error;
};

struct TooLarge : Error {
  using Error::Error;
};

}  // namespace elset
