#pragma once

#include <stdexcept>
#include <string>

namespace syzlab {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings or free modules.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// Input violates a documented precondition (zero polynomial where a degree
/// is required, inhomogeneous generator, bad configuration, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Textual input could not be parsed. Carries 1-based line/column when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what
                       : what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Internal consistency failure (a computation produced something that a
/// theorem says cannot happen).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace syzlab
