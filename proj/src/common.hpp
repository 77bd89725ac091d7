#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace cf {

using cd = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Error taxonomy. Domain errors are bad inputs; the numeric errors signal a
// failed certification or an unstable regime, never silently degraded output.
enum class ErrorKind {
  Domain,
  Degenerate,
  NoRoot,
  NoZero,
  MultipleZero,
  Contour,
  Grid,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(ErrorKind::Domain, msg) {}
};

class DegenerateError : public Error {
 public:
  explicit DegenerateError(const std::string& msg)
      : Error(ErrorKind::Degenerate, msg) {}
};

class NoRootError : public Error {
 public:
  explicit NoRootError(const std::string& msg) : Error(ErrorKind::NoRoot, msg) {}
};

class NoZeroError : public Error {
 public:
  explicit NoZeroError(const std::string& msg) : Error(ErrorKind::NoZero, msg) {}
};

class MultipleZeroError : public Error {
 public:
  explicit MultipleZeroError(const std::string& msg)
      : Error(ErrorKind::MultipleZero, msg) {}
};

class ContourError : public Error {
 public:
  explicit ContourError(const std::string& msg)
      : Error(ErrorKind::Contour, msg) {}
};

class GridError : public Error {
 public:
  explicit GridError(const std::string& msg) : Error(ErrorKind::Grid, msg) {}
};

}  // namespace cf
