#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tcalg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands built for different variable counts, matrix sizes, arities or
/// backends.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// An evaluation table that no translation-invariant map can produce.
class InconsistentTable : public Error {
 public:
  using Error::Error;
};

/// The q-free parts of a table do not die out inside the probe window, so the
/// canonical coefficients cannot be read off without guessing.
class NotReconstructible : public Error {
 public:
  using Error::Error;
};

/// An operation restricted to one-variable sessions was called with n > 1.
class SessionError : public Error {
 public:
  using Error::Error;
};

/// Operands of types the operation does not combine.
class TypeMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line_(line),
        column_(column) {}
  explicit ParseError(const std::string& what) : Error(what) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

}  // namespace tcalg
