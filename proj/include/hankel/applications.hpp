#pragma once

#include <complex>
#include <string>
#include <vector>

#include "hankel/methods.hpp"
#include "hankel/moments.hpp"
#include "hankel/oracle.hpp"

namespace hankel {

enum class MethodKind { asymptotic, filon, oracle };

MethodKind parse_method_kind(const std::string& name);
std::string to_string(MethodKind kind);

/// Ai(-x) for x >= 0 from the two-Bessel identity.
long double airy_ai_neg(long double x);

struct AiryOptions {
  MethodKind method = MethodKind::asymptotic;
  int m = 3;
  /// Filon plan on [0, sqrt(b)] in the reduced variable; defaults to nodes
  /// {0, sqrt(b)} with multiplicities {3m, m}.
  FilonPlan plan;
};

/// I_A[f] = int_0^b f(x) Ai(-omega x) dx through the reduction to two
/// transforms with oscillator t^3 and frequency (2/3) omega^(3/2).
std::complex<double> airy_transform(const ExprFunction& f, double b, double omega, const AiryOptions& options = {});

/// Reference value of I_A[f] by direct quadrature of f(x) Ai(-omega x).
OracleResult airy_reference(const ExprFunction& f, double b, double omega, double tol = 1e-13);

struct FourierBesselOptions {
  MethodKind method = MethodKind::asymptotic;
  int m = 5;
  /// Multiplicity at both ends of the default Filon plan {0, b}.
  int filon_multiplicity = 4;
};

struct FourierBesselSeries {
  double nu = 0;
  double b = 1;
  std::vector<double> coeffs;
  std::vector<double> zeros_used;
  /// Which path produced each coefficient.
  std::vector<MethodKind> methods;
};

/// a_k = 2 / [b J_{nu+1}(j_k)]^2 int_0^b x f(x) J_nu(j_k x / b) dx, k = 1..K.
FourierBesselSeries fourier_bessel_coeffs(const ExprFunction& f, double b, double nu, int K,
                                          const FourierBesselOptions& options = {});

}  // namespace hankel
