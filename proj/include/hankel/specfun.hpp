#pragma once

#include <vector>

namespace hankel {

/// Value of a special function together with a truncation-based error bound.
template <typename Scalar = double>
struct SpecFunResult {
  Scalar value = 0;
  Scalar est_abs_error = 0;
};

// The templated kernels below are instantiated for double and long double.
// The long double versions feed the reference integrator.

/// Gamma function. Throws DomainError at 0, -1, -2, ...
template <typename Scalar>
Scalar gamma(Scalar x);

/// 1/Gamma(x), which is entire: returns exactly zero at the poles of Gamma.
template <typename Scalar>
Scalar rgamma(Scalar x);

/// Bessel function of the first kind J_nu(x) for real order and x >= 0.
///
/// Regimes: ascending series for small x, Steed's continued-fraction method
/// (CF1 + CF2 + Wronskian) in the transition region, and the Hankel
/// large-argument expansion with optimal truncation when it converges to
/// working precision. Negative non-integer orders are reached by downward
/// recurrence from nu + ceil(-nu); negative integer orders use
/// J_{-n} = (-1)^n J_n. Negative arguments are rejected (the complex phase
/// of J_nu(-x) is applied by callers that need it).
template <typename Scalar>
Scalar bessel_j(Scalar nu, Scalar x);

/// Lommel function S_{mu,nu}(z) from its large-z expansion, optimally
/// truncated at the smallest term. est_abs_error is the magnitude of the first
/// omitted term, and exactly zero when the series terminates.
///
/// Throws AccuracyError (carrying the best achievable bound) when the
/// non-terminating series cannot reach rel_tol * |z^(mu-1)|.
template <typename Scalar>
SpecFunResult<Scalar> lommel_s(Scalar mu, Scalar nu, Scalar z, double rel_tol = 1e-10);

/// k-th positive zero of J_nu, nu > -1, k >= 1.
double bessel_zero(double nu, int k);

/// First `count` positive zeros of J_nu in increasing order.
std::vector<double> bessel_zeros(double nu, int count);

}  // namespace hankel
