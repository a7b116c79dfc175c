#pragma once

#include <stdexcept>
#include <string>

namespace tamesym {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands live over different fields") {}
  using Error::Error;
};

class AmbientMismatch : public Error {
 public:
  AmbientMismatch() : Error("subspaces have different ambient dimensions") {}
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidPrime : public Error {
 public:
  using Error::Error;
};

class InvalidField : public Error {
 public:
  using Error::Error;
};

/// Presentation DSL errors carry a 1-based source position (0 when the
/// problem is not tied to a single token).
class PresentationError : public Error {
 public:
  PresentationError(const std::string& kind, const std::string& what,
                    int line, int column)
      : Error(kind + " at " + std::to_string(line) + ":" +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class ParseError : public PresentationError {
 public:
  ParseError(const std::string& what, int line, int column)
      : PresentationError("syntax error", what, line, column) {}
};

class PathError : public PresentationError {
 public:
  PathError(const std::string& what, int line, int column)
      : PresentationError("path error", what, line, column) {}
};

class NameError : public PresentationError {
 public:
  NameError(const std::string& what, int line, int column)
      : PresentationError("name error", what, line, column) {}
};

class TruncationError : public Error {
 public:
  using Error::Error;
};

class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class DualBasisFailure : public Error {
 public:
  using Error::Error;
};

class NotAnIdeal : public Error {
 public:
  using Error::Error;
};

class KStabilityFailure : public Error {
 public:
  using Error::Error;
};

class CharZero : public Error {
 public:
  CharZero() : Error("operation requires positive characteristic") {}
  using Error::Error;
};

class ParameterConstraint : public Error {
 public:
  using Error::Error;
};

class CharConstraint : public Error {
 public:
  using Error::Error;
};

class CharMismatch : public Error {
 public:
  CharMismatch() : Error("cannot compare algebras over different fields") {}
  using Error::Error;
};

}  // namespace tamesym
