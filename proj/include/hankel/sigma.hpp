#pragma once

#include <Eigen/Dense>
#include <functional>
#include <limits>
#include <vector>

#include "hankel/expr.hpp"
#include "hankel/jet.hpp"

namespace hankel {

/// Produces the jet of a function at `center` with `n` coefficients.
using JetSource = std::function<Jet<double>(double center, int n)>;

JetSource jet_source(const ExprFunction& f);

enum class SigmaVariant { plain, tilde, hat };

/// Values of sigma_k, k = 0..k_max, at a list of evaluation points, plus the
/// data at the critical point for the tilde and hat variants.
struct SigmaSequence {
  SigmaVariant variant = SigmaVariant::plain;
  double nu = 0;
  int order_r = 0;
  double critical_point = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> points;
  /// values(k, i) = sigma_k(points[i]).
  Eigen::MatrixXd values;
  /// reduced(k, i) = sigma_k(points[i]) minus its value at xi (tilde) or
  /// minus T_r[sigma_k](points[i], zeta) (hat); equals values for plain.
  Eigen::MatrixXd reduced;
  /// Jets of sigma_k at the critical point (tilde and hat).
  std::vector<Jet<double>> jets_at_critical;

  /// sigma_k(xi) for tilde; sigma_k^(j)(zeta) for hat.
  double at_critical(int k, int j = 0) const { return jets_at_critical.at(k).derivative_value(j); }
};

/// sigma_k[f](x), k = 0..k_max, for an oscillator with g, g' nonzero at x.
std::vector<double> sigma_plain(const ExprFunction& f, const ExprFunction& g, double nu, int k_max, double x);

SigmaSequence sigma_plain(const JetSource& f, const ExprFunction& g, double nu, int k_max,
                          const std::vector<double>& points);

/// Zero-case recursion with g(xi) = 0. The value at xi is obtained by
/// cancelling the common zero in jet space.
SigmaSequence sigma_tilde(const JetSource& f, const ExprFunction& g, double nu, double xi, int k_max,
                          const std::vector<double>& points);
SigmaSequence sigma_tilde(const ExprFunction& f, const ExprFunction& g, double nu, double xi, int k_max,
                          const std::vector<double>& points = {});

/// Stationary-case recursion at a type II stationary point zeta of order r.
/// Jets at zeta carry at least j_max + 1 coefficients for every k <= k_max.
SigmaSequence sigma_hat(const JetSource& f, const ExprFunction& g, double nu, double zeta, int r, int k_max,
                        int j_max, const std::vector<double>& points);
SigmaSequence sigma_hat(const ExprFunction& f, const ExprFunction& g, double nu, double zeta, int r, int k_max,
                        int j_max, const std::vector<double>& points = {});

/// x -> sigma_k(x) for regular points x, reusing the critical-point data of
/// `seq` (used to integrate remainders).
std::function<double(double)> sigma_function(const JetSource& f, const ExprFunction& g, const SigmaSequence& seq,
                                             int k);

}  // namespace hankel
