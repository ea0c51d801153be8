#pragma once

#include <stdexcept>
#include <string>

namespace bridgekit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A continued-fraction tail evaluated to zero where a reciprocal was needed.
class ZeroDivision : public Error {
 public:
  using Error::Error;
};

/// Rational with even denominator or |r| >= 1: not a two-bridge knot.
class NotAKnotFraction : public Error {
 public:
  using Error::Error;
};

class NotAKnot : public Error {
 public:
  using Error::Error;
};

/// Malformed word text. Carries the offending token and its 0-based
/// character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string token, std::size_t position)
      : Error(what), token_(std::move(token)), position_(position) {}

  const std::string& token() const noexcept { return token_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string token_;
  std::size_t position_;
};

/// Word entries violating the IntWord / EvenWord invariants.
class InvalidWord : public Error {
 public:
  using Error::Error;
};

/// Enumeration requested above the configured crossing-number ceiling.
class ResourceBound : public Error {
 public:
  using Error::Error;
};

/// A closed form divided with nonzero remainder.
class NonIntegralFormula : public Error {
 public:
  using Error::Error;
};

class MergeCancellation : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// The braid-index inequality audit found a negative term or a sum mismatch.
class AuditFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace bridgekit
