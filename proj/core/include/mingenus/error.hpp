#pragma once

#include <stdexcept>
#include <string>

namespace mingenus {

/// Base for every error raised by the library. Each subclass names one
/// failure mode so callers (and the CLI exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class InvalidForm : public Error {
 public:
  using Error::Error;
};

class ReflectionNotLicensed : public Error {
 public:
  using Error::Error;
};

/// The caller invoked a routine outside the case it handles (e.g. a
/// non-negative-square reduction on a class of negative square).
class WrongRoutine : public Error {
 public:
  using Error::Error;
};

class NonTermination : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class DisconnectedConfiguration : public Error {
 public:
  using Error::Error;
};

class Inapplicable : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class UnknownManifold : public Error {
 public:
  using Error::Error;
};

class BadCoordinates : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace mingenus
