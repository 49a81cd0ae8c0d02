#pragma once

#include <complex>
#include <vector>

#include "hankel/sigma.hpp"
#include "hankel/transform.hpp"

namespace hankel {

enum class FilonBasis { E, E_hat };

/// Interpolation nodes a = x_0 < ... < x_d = b with Hermite multiplicities.
/// E_hat needs a type II stationary point of order order_r at a or at b.
struct FilonPlan {
  std::vector<double> nodes;
  std::vector<int> multiplicities;
  FilonBasis basis = FilonBasis::E;
  int order_r = 0;

  int size() const;
  void validate(double a, double b) const;
};

/// Interpolant p = Lambda * sum_k c_k s^k with s = (y - shift) / scale, where
/// y = g, Lambda = g' for E and y = (+-g)^(1/(r+1)), Lambda = y' for E_hat.
struct FilonCoefficients {
  std::vector<double> c;
  double shift = 0;
  double scale = 1;
  /// 2-norm condition number of the row-equilibrated system.
  double condition = 1;
  /// The coefficients of y^j, recovered from c in extended precision.
  std::vector<long double> monomial() const;
};

/// Solves the confluent Vandermonde system for the interpolant of f.
/// E_hat plans must have their stationary point at a (see filon for b).
FilonCoefficients filon_coeffs(const JetSource& f, const ExprFunction& g, double a, double b, const FilonPlan& plan);
FilonCoefficients filon_coeffs(const TransformSpec& spec, const FilonPlan& plan);

/// Evaluates the interpolant p(x) built by filon_coeffs.
double filon_interpolant(const FilonCoefficients& coeffs, const ExprFunction& g, const FilonPlan& plan, double x);
Jet<double> filon_interpolant_jet(const FilonCoefficients& coeffs, const ExprFunction& g, const FilonPlan& plan,
                                  double x, int n);

/// Q^F = H_nu[p] = sum_k c_k mu_k. E_hat plans with the stationary point at b
/// are handled by reflecting the interval.
std::complex<double> filon(const TransformSpec& spec, const FilonPlan& plan);
std::complex<long double> filon_ld(const TransformSpec& spec, const FilonPlan& plan);
std::complex<long double> filon_ld(const JetSource& f, const ExprFunction& g, double a, double b, double nu,
                                   double omega, const FilonPlan& plan);

/// Q_m^A with no critical points on [a, b].
std::complex<double> asymptotic_plain(const TransformSpec& spec, int m);

/// Q_m^A for a single zero xi of g with g' != 0.
std::complex<double> asymptotic_zero(const TransformSpec& spec, double xi, int m);

enum class StationaryPosition { left_endpoint, right_endpoint, interior };

/// Q_m^A for a type II stationary point zeta of order r.
std::complex<double> asymptotic_stationary(const TransformSpec& spec, double zeta, int r, int m,
                                           StationaryPosition position);

}  // namespace hankel
