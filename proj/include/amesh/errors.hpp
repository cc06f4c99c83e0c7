#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace amesh {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (t outside [a,b],
/// m <= 1, N = 0, trigonometric interval longer than 2*pi, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Unknown gallery name.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent use of otherwise valid objects (e.g. mismatched boundaries).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Malformed boundary or table document.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, long arc_index, std::string field)
      : Error(format(what, arc_index, field)),
        arc_index_(arc_index),
        field_(std::move(field)) {}

  /// Index of the offending arc, or -1 when the error is not arc-specific.
  long arc_index() const noexcept { return arc_index_; }
  const std::string& field() const noexcept { return field_; }

 private:
  static std::string format(const std::string& what, long arc, const std::string& field) {
    std::string msg = "parse error";
    if (arc >= 0) msg += " in arc " + std::to_string(arc);
    if (!field.empty()) msg += " at field '" + field + "'";
    return msg + ": " + what;
  }

  long arc_index_;
  std::string field_;
};

/// A factorization met a (numerically) zero pivot.
class SingularityError : public Error {
 public:
  SingularityError(const std::string& what, std::size_t index)
      : Error(what + " (index " + std::to_string(index) + ")"), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Node extraction could not produce n+1 distinct, unisolvent nodes.
class ExtractionError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure that is not a plain singular pivot.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace amesh
