#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gauge {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or referentially broken input (unknown names, missing table
/// entries, violated operation preconditions on raw data).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A partial operation was called off its domain: composing non-composable
/// arrows, dividing points from different fibres, and so on.
class BookkeepingError : public Error {
 public:
  using Error::Error;
};

/// An operation declined to run because a checked hypothesis does not hold.
/// The message carries the witness.
class Refused : public Error {
 public:
  using Error::Error;
};

/// A well-definedness check that should be implied by the hypotheses failed.
/// Seeing one means the model or the implementation is broken.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class CeilingExceeded : public Error {
 public:
  CeilingExceeded(std::uint64_t count, std::uint64_t ceiling)
      : Error("enumeration of " + std::to_string(count) + " items exceeds ceiling " +
              std::to_string(ceiling)),
        count_(count),
        ceiling_(ceiling) {}

  std::uint64_t count() const { return count_; }
  std::uint64_t ceiling() const { return ceiling_; }

 private:
  std::uint64_t count_;
  std::uint64_t ceiling_;
};

/// A syntactically valid document with the wrong shape: unknown or missing
/// fields, wrong value types. The message starts with the JSON path.
class SchemaError : public InputError {
 public:
  SchemaError(const std::string& path, const std::string& what) : InputError(path + ": " + what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace gauge
