// Exception types raised by the tonalspace library.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tonalspace {

/// Base class for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates its type invariants (negative bin, NaN, wrong length).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Operands were built with different weight vectors.
class Incompatible : public Error {
 public:
  using Error::Error;
};

/// The operation is undefined for the given values (silent TIV, zero norm).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// Not enough elements to compute the result.
class InsufficientInput : public Error {
 public:
  using Error::Error;
};

/// A chroma, profile or WAV file could not be parsed. `row()` is the 1-based
/// line (CSV) or frame index (JSON) the problem was found at, or 0 when the
/// error is not tied to a row.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t row = 0)
      : Error(what), row_(row) {}

  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

}  // namespace tonalspace
