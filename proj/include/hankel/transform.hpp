#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "hankel/expr.hpp"
#include "hankel/specfun.hpp"

namespace hankel {

/// H_nu[f] = int_a^b f(x) J_nu(omega g(x)) dx.
struct TransformSpec {
  ExprFunction f;
  ExprFunction g;
  double a = 0;
  double b = 1;
  double nu = 0;
  double omega = 1;
};

/// e^{i nu pi}, exact for integer and half-integer nu.
template <typename Scalar>
std::complex<Scalar> phase_pi(Scalar nu) {
  Scalar t = std::fmod(nu, Scalar(2));
  if (t < 0) t += 2;
  if (t == 0) return {1, 0};
  if (t == Scalar(0.5)) return {0, 1};
  if (t == 1) return {-1, 0};
  if (t == Scalar(1.5)) return {0, -1};
  const Scalar angle = std::numbers::pi_v<Scalar> * t;
  return {std::cos(angle), std::sin(angle)};
}

/// J_nu(z) on the branch J_nu(-z) = e^{i nu pi} J_nu(z) for z < 0.
template <typename Scalar>
std::complex<Scalar> bessel_j_branch(Scalar nu, Scalar z) {
  if (z >= 0) return {bessel_j(nu, z), 0};
  return phase_pi(nu) * bessel_j(nu, -z);
}

}  // namespace hankel
