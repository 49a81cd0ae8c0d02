#include "hankel/applications.hpp"

#include <cmath>

#include "hankel/oracle.hpp"
#include "hankel/specfun.hpp"

namespace hankel {

MethodKind parse_method_kind(const std::string& name) {
  if (name == "asymptotic") return MethodKind::asymptotic;
  if (name == "filon") return MethodKind::filon;
  if (name == "oracle") return MethodKind::oracle;
  throw UsageError("unknown method '" + name + "' (expected asymptotic, filon or oracle)");
}

std::string to_string(MethodKind kind) {
  switch (kind) {
    case MethodKind::asymptotic:
      return "asymptotic";
    case MethodKind::filon:
      return "filon";
    case MethodKind::oracle:
      return "oracle";
  }
  return "?";
}

long double airy_ai_neg(long double x) {
  if (x < 0) throw DomainError("airy_ai_neg: requires x >= 0");
  if (x == 0) return 1 / (std::cbrt(9.0L) * gamma(2.0L / 3));
  const long double z = 2 * std::pow(x, 1.5L) / 3;
  return std::sqrt(x) / 3 * (bessel_j(1.0L / 3, z) + bessel_j(-1.0L / 3, z));
}

std::complex<double> airy_transform(const ExprFunction& f, double b, double omega, const AiryOptions& options) {
  if (!(b > 0)) throw DomainError("airy_transform: requires b > 0");
  if (!(omega > 0)) throw DomainError("airy_transform: omega must be positive");
  if (f.is_zero()) return 0;
  if (options.method == MethodKind::oracle) return airy_reference(f, b, omega).value;

  const ExprFunction t = ExprFunction::variable();
  const ExprFunction t2 = t * t;
  TransformSpec spec;
  spec.f = f.substitute(t2) * t2;
  spec.g = t2 * t;
  spec.a = 0;
  spec.b = std::sqrt(b);
  spec.omega = 2.0 / 3.0 * std::pow(omega, 1.5);

  FilonPlan plan = options.plan;
  if (options.method == MethodKind::filon && plan.nodes.empty()) {
    plan.nodes = {0, spec.b};
    plan.multiplicities = {3 * options.m, options.m};
  }
  plan.basis = FilonBasis::E_hat;
  plan.order_r = 2;

  std::complex<double> sum = 0;
  for (const double nu : {1.0 / 3.0, -1.0 / 3.0}) {
    spec.nu = nu;
    sum += options.method == MethodKind::filon
               ? filon(spec, plan)
               : asymptotic_stationary(spec, 0, 2, options.m, StationaryPosition::left_endpoint);
  }
  return 2 * std::sqrt(omega) / 3 * sum;
}

OracleResult airy_reference(const ExprFunction& f, double b, double omega, double tol) {
  if (!(b > 0)) throw DomainError("airy_reference: requires b > 0");
  if (f.is_zero()) {
    OracleResult r;
    r.panels_used = 1;
    return r;
  }
  const long double w = omega;
  OscillatoryIntegrand in;
  in.value = [f, w](long double x) -> std::complex<long double> { return f.eval(x) * airy_ai_neg(w * x); };
  in.phase = [w](long double x) { return 2 * std::pow(w * x, 1.5L) / 3; };
  OracleOptions options;
  options.tol = tol;
  return integrate_oscillatory(in, 0, b, options);
}

FourierBesselSeries fourier_bessel_coeffs(const ExprFunction& f, double b, double nu, int K,
                                          const FourierBesselOptions& options) {
  if (!(b > 0)) throw DomainError("fourier_bessel_coeffs: requires b > 0");
  if (!(nu > -1)) throw DomainError("fourier_bessel_coeffs: requires nu > -1");
  if (K < 0) throw UsageError("fourier_bessel_coeffs: negative count");
  FourierBesselSeries out;
  out.nu = nu;
  out.b = b;
  out.zeros_used = bessel_zeros(nu, K);

  const ExprFunction x = ExprFunction::variable();
  TransformSpec spec{x * f, x, 0, b, nu, 1};
  for (const double j : out.zeros_used) {
    if (f.is_zero()) {
      out.coeffs.push_back(0);
      out.methods.push_back(options.method);
      continue;
    }
    spec.omega = j / b;
    MethodKind used = options.method;
    if (spec.omega < kOracleCrossover) used = MethodKind::oracle;
    std::complex<double> integral;
    switch (used) {
      case MethodKind::oracle:
        integral = reference_hankel(spec).value;
        break;
      case MethodKind::asymptotic:
        integral = asymptotic_zero(spec, 0, options.m);
        break;
      case MethodKind::filon: {
        FilonPlan plan;
        plan.nodes = {0, b};
        plan.multiplicities = {options.filon_multiplicity, options.filon_multiplicity};
        integral = filon(spec, plan);
        break;
      }
    }
    const double scale = b * bessel_j(nu + 1, j);
    out.coeffs.push_back(2 / (scale * scale) * integral.real());
    out.methods.push_back(used);
  }
  return out;
}

}  // namespace hankel
