#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hankel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation (pole of Gamma,
/// log of a non-positive number, divergent moment, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Misuse of an API (mismatched jet centers, malformed plan, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A quotient whose leading coefficients do not cancel.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// The oscillator does not match the case a method was built for.
class ClassificationError : public Error {
 public:
  using Error::Error;
};

/// More than one critical point in a single interval.
class SubdivideRequired : public ClassificationError {
 public:
  SubdivideRequired(const std::string& what, std::vector<double> points)
      : ClassificationError(what), points_(std::move(points)) {}
  const std::vector<double>& points() const { return points_; }

 private:
  std::vector<double> points_;
};

class ConditioningError : public Error {
 public:
  ConditioningError(const std::string& what, double condition)
      : Error(what), condition_(condition) {}
  double condition() const { return condition_; }

 private:
  double condition_;
};

/// A divergent expansion cannot reach the requested accuracy.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double best_bound)
      : Error(what), best_bound_(best_bound) {}
  double best_bound() const { return best_bound_; }

 private:
  double best_bound_;
};

/// Reference quadrature refused: problem too expensive or tolerance unreachable.
class OracleError : public Error {
 public:
  using Error::Error;
};

}  // namespace hankel
