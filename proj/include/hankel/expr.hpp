#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hankel/jet.hpp"

namespace hankel {

enum class Op { constant, variable, add, sub, mul, div, pow, neg, sin, cos, exp, log, sqrt, besselj };

struct Node {
  Op op = Op::constant;
  long double value = 0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

using NodePtr = std::shared_ptr<const Node>;

/// Parsed expression in the single variable x.
///
/// Grammar: numbers, x, pi, e, + - * / ^, unary minus, and the functions
/// sin cos exp log sqrt, plus besselj(nu, u) whose order must be constant.
/// Precedence is ^ (right associative) > unary minus > * / > + -.
class ExprFunction {
 public:
  ExprFunction();
  explicit ExprFunction(NodePtr root, std::string source = {});

  template <typename Scalar>
  Scalar eval(Scalar x) const;

  template <typename Scalar>
  Jet<Scalar> eval_jet(Scalar center, int n) const;

  /// Fully parenthesized text that parses back to the same tree.
  std::string print() const;
  const std::string& source() const { return source_; }
  const Node& root() const { return *root_; }
  NodePtr root_ptr() const { return root_; }

  bool depends_on_x() const;
  bool is_zero() const;

  /// Replaces every occurrence of x by `inner`.
  ExprFunction substitute(const ExprFunction& inner) const;

  ExprFunction operator*(const ExprFunction& other) const;
  ExprFunction operator+(const ExprFunction& other) const;
  ExprFunction operator-(const ExprFunction& other) const;

  static ExprFunction constant(long double value);
  static ExprFunction variable();

 private:
  NodePtr root_;
  std::string source_;
};

ExprFunction parse(const std::string& src);

template <typename Scalar>
Jet<Scalar> eval_jet(const ExprFunction& fn, Scalar center, int n) {
  return fn.eval_jet(center, n);
}

/// Probes fn on a uniform grid of [a,b]; throws DomainError at the first
/// point where evaluation fails or is non-finite.
void check_domain(const ExprFunction& fn, double a, double b, int probes = 257);

/// x -> a + b - x applied to fn.
ExprFunction mirror(const ExprFunction& fn, double a, double b);

enum class CriticalKind { zero, stationary };
enum class StationaryType { none, I, II };

struct CriticalPoint {
  double location = 0;
  CriticalKind kind = CriticalKind::zero;
  int order_r = 0;
  StationaryType stationary_type = StationaryType::none;
  bool at_endpoint = false;
};

struct ClassifyOptions {
  int panels = 2048;
  double zero_tol = 1e-11;
  /// Relative size below which a Taylor coefficient of g at a stationary
  /// point counts as vanishing when determining the order r.
  double order_tol = 1e-7;
};

/// All zeros of g and g' on [a,b], polished, merged and ordered. A point
/// that is both a zero and a stationary point is reported once, as a type II
/// stationary point.
std::vector<CriticalPoint> find_critical_points(const ExprFunction& g, double a, double b,
                                                const ClassifyOptions& options = {});

/// As find_critical_points, but throws SubdivideRequired when more than one
/// point is found.
std::vector<CriticalPoint> classify_oscillator(const ExprFunction& g, double a, double b,
                                               const ClassifyOptions& options = {});

std::string describe(const CriticalPoint& point);

}  // namespace hankel
