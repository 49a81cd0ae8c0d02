#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "hankel/transform.hpp"

namespace hankel {

struct OracleResult {
  std::complex<double> value;
  double est_abs_error = 0;
  long panels_used = 0;
  /// Integral of |F|, the scale the tolerance is measured against.
  double l1_norm = 0;

  double real() const { return value.real(); }
};

struct OracleOptions {
  /// Two successive levels must agree within tol * int |F|.
  double tol = 1e-13;
  int max_levels = 6;
  /// Cap on the total variation of the phase, in radians.
  double max_phase_variation = 2e7;
};

/// Integrand description for the panel integrator. Panels are bisected until
/// `phase` varies by at most pi across each of them; near each singular point
/// the panels are graded geometrically.
struct OscillatoryIntegrand {
  std::function<std::complex<long double>(long double)> value;
  std::function<long double(long double)> phase;
  struct Singularity {
    double location;
    /// Local behaviour |x - location|^exponent.
    double exponent;
  };
  std::vector<Singularity> singularities;
};

OracleResult integrate_oscillatory(const OscillatoryIntegrand& integrand, double a, double b,
                                   const OracleOptions& options = {});

/// Reference value of H_nu[f] by oscillation-resolving Gauss-Legendre panels
/// in extended precision. Refuses omega * max|g| > 1e7.
OracleResult reference_hankel(const TransformSpec& spec, double tol = 1e-13);

/// Same, for an arbitrary amplitude callable in place of spec.f.
OracleResult reference_hankel(const std::function<long double(long double)>& amplitude, const ExprFunction& g,
                              double a, double b, double nu, double omega, double tol = 1e-13);

/// 15-point Gauss-Legendre nodes and weights on [-1,1].
const std::vector<std::pair<long double, long double>>& gauss_legendre_15();

}  // namespace hankel
