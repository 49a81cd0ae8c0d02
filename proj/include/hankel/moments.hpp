#pragma once

#include <complex>
#include <string>
#include <vector>

#include "hankel/expr.hpp"

namespace hankel {

enum class Provenance { closed_form, recurrence, oracle };

std::string to_string(Provenance p);

/// Moments with per-entry provenance. Values are kept in extended precision;
/// entries of the e^{i nu pi} branch make the table complex.
struct MomentTable {
  std::vector<std::complex<long double>> values;
  std::vector<Provenance> provenance;
  /// Largest index for which the forward recurrence is stable.
  int stable_upto = -1;
  bool is_complex = false;

  std::size_t size() const { return values.size(); }
  std::complex<double> operator[](std::size_t k) const {
    return {static_cast<double>(values[k].real()), static_cast<double>(values[k].imag())};
  }
};

struct PowerMoment {
  long double value = 0;
  Provenance provenance = Provenance::closed_form;
};

/// int_0^1 x^mu J_nu(omega x) dx from the Bessel-Lommel closed form when the
/// Lommel expansion reaches 1e-10 relative accuracy, otherwise by quadrature.
/// Requires mu + nu > -1 (negative integer nu is reduced to |nu|).
PowerMoment moment_power_detail(long double mu, long double nu, long double omega);
double moment_power(double mu, double nu, double omega);

/// mu_k = int_a^b g' g^k J_nu(omega g) dx, k = 0..n-1. Initial values from the
/// closed form on [0, g(b)] and [0, g(a)]; the three-term recurrence up to
/// stable_upto = floor(sqrt(nu^2 + (omega G)^2) - 1) with G = max |g| at the
/// endpoints; beyond it the initial-value formula is used directly.
MomentTable modified_moments(const ExprFunction& g, double a, double b, double nu, double omega, int n);

/// hat-mu_k = H_nu[g' (+-g)^((k-r)/(r+1))] for a type II stationary point of
/// order r at x = a. Entries whose integral diverges are NaN; callers must
/// give them a zero weight.
MomentTable modified_moments_stationary(const ExprFunction& g, double a, double b, double nu, double omega, int r,
                                        int n);

/// M(nu, omega) = int_a^b J_nu(omega g) dx for an oscillator with a single
/// zero and no stationary points: Filon on f = 1 with nodes {a, xi, b},
/// multiplicities 3, or quadrature below omega = 30.
std::complex<double> zero_case_moment(const ExprFunction& g, double a, double b, double nu, double omega);
std::complex<long double> zero_case_moment_ld(const ExprFunction& g, double a, double b, double nu, double omega);

/// M_j(zeta, nu, omega) = int_a^b (x - zeta)^j J_nu(omega g) dx, j = 0..j_max,
/// at a type II stationary point of order r. Oscillators of the form
/// c (x - zeta)^(r+1) reduce to moment_power; others go to quadrature.
/// Entries with a divergent integral are NaN.
std::vector<std::complex<long double>> generalized_moments(const ExprFunction& g, double zeta, double a, double b,
                                                           double nu, double omega, int r, int j_max);

/// Crossover below which moments are taken from the reference integrator.
inline constexpr double kOracleCrossover = 30.0;

}  // namespace hankel
