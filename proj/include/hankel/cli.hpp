#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hankel/applications.hpp"
#include "hankel/sweep.hpp"

namespace hankel {

/// One method as requested on the command line, e.g. "asymptotic:m=2",
/// "filon:nodes=1,4/3,5/3,2:mults=2,2,2,2", "oracle:tol=1e-10". Optional
/// fields: id=NAME, rate=R (overrides the expected error rate).
struct MethodRequest {
  MethodKind kind = MethodKind::asymptotic;
  int m = 1;
  std::vector<double> nodes;
  std::vector<int> multiplicities;
  double tol = 1e-13;
  std::optional<double> rate;
  std::string label;

  std::string id() const;
};

MethodRequest parse_method_request(const std::string& text);

/// Comma-separated reals; each entry may be an expression such as 4/3 or pi/2.
std::vector<double> parse_real_list(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

/// Subinterval carrying at most one critical point.
struct Piece {
  double a = 0;
  double b = 0;
  std::optional<CriticalPoint> point;
};

/// Splits [a, b] halfway between consecutive critical points.
std::vector<Piece> subdivide(const ExprFunction& g, double a, double b);

struct Evaluation {
  std::complex<double> value;
  /// Oracle only.
  double est_abs_error = 0;
  double expected_rate = 0;
  std::string method;
  std::vector<std::string> classification;
  int pieces = 1;
};

/// Classifies g, subdivides at multiple critical points, dispatches the
/// requested method on each piece and sums.
Evaluation evaluate(const TransformSpec& spec, const MethodRequest& request);

/// Error rate the theory predicts for `request` on `spec` (0 for the oracle).
double expected_rate(const TransformSpec& spec, const MethodRequest& request);

struct SweepSettings {
  double omega_min = 100;
  double omega_max = 1e4;
  int points = 20;
  unsigned threads = 0;
  bool fit_upper_half = true;
};

/// Errors against the oracle, or against the method with the highest
/// expected rate once omega * max|g| passes the oracle cost guard.
SweepReport sweep(const TransformSpec& spec, const std::vector<MethodRequest>& methods,
                  const SweepSettings& settings);

void write_summary(std::ostream& out, const SweepReport& report);

/// k,re,im,provenance,stable
void write_moments_csv(std::ostream& out, const MomentTable& table);

}  // namespace hankel
