#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ladderlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An adaptive routine could not reach the requested tolerance.
class ToleranceError : public Error {
 public:
  ToleranceError(const std::string& what, double best_value, double best_error)
      : Error(what), best_value_(best_value), best_error_(best_error) {}
  double best_value() const noexcept { return best_value_; }
  double best_error() const noexcept { return best_error_; }

 private:
  double best_value_;
  double best_error_;
};

/// A root could not be bracketed.
class BracketError : public Error {
 public:
  using Error::Error;
};

/// A checkpoint cache failed its invariants on load or insert.
class CacheError : public Error {
 public:
  using Error::Error;
};

/// Integer arithmetic would overflow 64 bits.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// The request exceeds a supported resource range.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An exact integer check found x^n + y^n == z^n.
class FermatViolation : public Error {
 public:
  FermatViolation(std::int64_t x, std::int64_t y, std::int64_t z, int n)
      : Error("x^n + y^n == z^n for (" + std::to_string(x) + ", " + std::to_string(y) + ", " +
              std::to_string(z) + ", n=" + std::to_string(n) + ")") {}
};

}  // namespace ladderlab
