#include "hankel/methods.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "hankel/moments.hpp"

namespace hankel {

namespace {

using Complex = std::complex<long double>;

std::complex<double> to_d(Complex z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

// (-omega)^{-k}
long double neg_power(long double omega, int k) {
  const long double p = std::pow(omega, static_cast<long double>(-k));
  return k % 2 == 0 ? p : -p;
}

int sign_of(double v) { return v > 0 ? 1 : -1; }

// Lambda and y jets at x for the E_hat basis with the stationary point at zeta.
void hat_jets(const ExprFunction& g, double zeta, int r, double x, int n, Jet<double>& lambda, Jet<double>& y) {
  const int len = n + 1;
  const double rp = r + 1;
  Jet<double> yj;
  if (x == zeta) {
    const Jet<double> h = jet_shift_div_power(g.eval_jet(x, len + r + 1), r + 1, 1e-9);
    const double sigma = sign_of(h[0]);
    yj = jet_mul_power(pow(sigma * h, 1.0 / rp), 1).truncated(len);
    lambda = (sigma * rp) * jet_derivative(yj);
  } else {
    const Jet<double> gj = g.eval_jet(x, len);
    const double sigma = sign_of(gj[0]);
    yj = pow(sigma * gj, 1.0 / rp);
    lambda = (sigma * rp) * jet_derivative(yj);
  }
  y = yj.truncated(n);
  lambda = lambda.truncated(n);
}

void basis_jets(const ExprFunction& g, const FilonPlan& plan, double zeta, double x, int n, Jet<double>& lambda,
                Jet<double>& y) {
  if (plan.basis == FilonBasis::E) {
    const Jet<double> gj = g.eval_jet(x, n + 1);
    y = gj.truncated(n);
    lambda = jet_derivative(gj);
  } else {
    hat_jets(g, zeta, plan.order_r, x, n, lambda, y);
  }
}

// Returns +1 when the stationary point of an E_hat plan sits at a, -1 at b.
int stationary_side(const ExprFunction& g, double a, double b, int r) {
  auto vanishes = [&](double x) {
    const Jet<double> j = g.eval_jet(x, r + 2);
    const double scale = std::max(j.max_abs(), 1e-300);
    for (int i = 0; i <= r; ++i) {
      if (std::abs(j[i]) > 1e-9 * scale) return false;
    }
    return j[r + 1] != 0;
  };
  if (vanishes(a)) return 1;
  if (vanishes(b)) return -1;
  throw ClassificationError("filon: E_hat basis needs a type II stationary point of order " + std::to_string(r) +
                            " at an endpoint");
}

JetSource mirrored_source(const JetSource& f, double a, double b) {
  return [f, a, b](double center, int n) {
    const Jet<double> j = f(a + b - center, n);
    Jet<double>::Vector c = j.coeffs();
    for (int i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return Jet<double>(center, c);
  };
}

FilonPlan mirrored_plan(const FilonPlan& plan, double a, double b) {
  FilonPlan out = plan;
  out.nodes.clear();
  out.multiplicities.clear();
  for (std::size_t i = plan.nodes.size(); i-- > 0;) {
    out.nodes.push_back(a + b - plan.nodes[i]);
    out.multiplicities.push_back(plan.multiplicities[i]);
  }
  out.nodes.front() = a;
  out.nodes.back() = b;
  return out;
}

void require_no_critical(const ExprFunction& g, double a, double b, const char* what) {
  const auto pts = find_critical_points(g, a, b);
  if (!pts.empty()) {
    throw ClassificationError(std::string(what) + ": oscillator has a critical point (" + describe(pts.front()) +
                              "); use the matching method");
  }
}

// Boundary block sum_{k=1}^m (-omega)^{-k} s_{k-1}(x) / g'(x) J_{nu+k}(omega g(x)).
Complex boundary_block(const Eigen::MatrixXd& reduced, int column, const ExprFunction& g, double x, double nu,
                       double omega, int m) {
  const Jet<long double> gj = g.eval_jet(static_cast<long double>(x), 2);
  const long double w = omega;
  Complex sum = 0;
  for (int k = 1; k <= m; ++k) {
    const double s = reduced(k - 1, column);
    if (s == 0) continue;
    sum += neg_power(w, k) * (s / gj[1]) * bessel_j_branch(static_cast<long double>(nu) + k, w * gj[0]);
  }
  return sum;
}

}  // namespace

int FilonPlan::size() const {
  int n = 0;
  for (int m : multiplicities) n += m;
  return n;
}

void FilonPlan::validate(double a, double b) const {
  if (nodes.size() < 2 || nodes.size() != multiplicities.size()) {
    throw UsageError("filon: need at least two nodes and one multiplicity per node");
  }
  if (nodes.front() != a || nodes.back() != b) throw UsageError("filon: nodes must start at a and end at b");
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (!(nodes[i] > nodes[i - 1])) throw UsageError("filon: nodes must be strictly increasing");
  }
  for (int m : multiplicities) {
    if (m < 1) throw UsageError("filon: multiplicities must be at least 1");
  }
  if (basis == FilonBasis::E_hat && order_r < 1) throw UsageError("filon: E_hat basis needs order_r >= 1");
}

std::vector<long double> FilonCoefficients::monomial() const {
  const int n = static_cast<int>(c.size());
  std::vector<long double> d(static_cast<std::size_t>(n), 0);
  const long double sh = shift;
  const long double sc = scale;
  for (int k = 0; k < n; ++k) {
    if (c[static_cast<std::size_t>(k)] == 0) continue;
    // c_k ((y - sh) / sc)^k expanded in powers of y.
    long double binom = 1;
    const long double base = c[static_cast<std::size_t>(k)] / std::pow(sc, static_cast<long double>(k));
    for (int j = k; j >= 0; --j) {
      d[static_cast<std::size_t>(j)] += base * binom * std::pow(-sh, static_cast<long double>(k - j));
      binom = binom * j / (k - j + 1);
    }
  }
  return d;
}

FilonCoefficients filon_coeffs(const JetSource& f, const ExprFunction& g, double a, double b, const FilonPlan& plan) {
  plan.validate(a, b);
  if (plan.basis == FilonBasis::E_hat && stationary_side(g, a, b, plan.order_r) != 1) {
    throw UsageError("filon_coeffs: E_hat plans must have the stationary point at a");
  }
  const int n = plan.size();
  FilonCoefficients out;
  if (plan.basis == FilonBasis::E) {
    const double ga = g.eval(a);
    const double gb = g.eval(b);
    out.shift = (ga + gb) / 2;
    out.scale = (gb - ga) / 2;
    if (out.scale == 0) throw ClassificationError("filon_coeffs: g(a) = g(b)");
  } else {
    const double gb = g.eval(b);
    out.shift = 0;
    out.scale = std::pow(std::abs(gb), 1.0 / (plan.order_r + 1));
  }

  Eigen::MatrixXd A(n, n);
  Eigen::VectorXd rhs(n);
  int row = 0;
  for (std::size_t i = 0; i < plan.nodes.size(); ++i) {
    const double x = plan.nodes[i];
    const int mi = plan.multiplicities[i];
    Jet<double> lambda;
    Jet<double> y;
    basis_jets(g, plan, a, x, mi, lambda, y);
    const Jet<double> s = (y - out.shift) * (1.0 / out.scale);
    const Jet<double> fj = f(x, mi);
    Jet<double> term = lambda;
    for (int k = 0; k < n; ++k) {
      for (int l = 0; l < mi; ++l) A(row + l, k) = term[l];
      term = jet_mul(term, s).truncated(mi);
    }
    for (int l = 0; l < mi; ++l) rhs[row + l] = fj[l];
    row += mi;
  }
  for (int i = 0; i < n; ++i) {
    const double norm = A.row(i).cwiseAbs().maxCoeff();
    if (norm == 0) throw ConditioningError("filon_coeffs: empty interpolation condition", INFINITY);
    A.row(i) /= norm;
    rhs[i] /= norm;
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
  const auto& sv = svd.singularValues();
  out.condition = sv[n - 1] > 0 ? sv[0] / sv[n - 1] : INFINITY;
  if (!(out.condition < 1e13)) {
    throw ConditioningError("filon_coeffs: interpolation system is numerically singular", out.condition);
  }
  const Eigen::VectorXd c = A.fullPivLu().solve(rhs);
  out.c.assign(c.data(), c.data() + n);
  return out;
}

FilonCoefficients filon_coeffs(const TransformSpec& spec, const FilonPlan& plan) {
  return filon_coeffs(jet_source(spec.f), spec.g, spec.a, spec.b, plan);
}

double filon_interpolant(const FilonCoefficients& coeffs, const ExprFunction& g, const FilonPlan& plan, double x) {
  Jet<double> lambda;
  Jet<double> y;
  basis_jets(g, plan, plan.nodes.front(), x, 1, lambda, y);
  const double s = (y[0] - coeffs.shift) / coeffs.scale;
  double sum = 0;
  for (std::size_t k = coeffs.c.size(); k-- > 0;) sum = sum * s + coeffs.c[k];
  return lambda[0] * sum;
}

Jet<double> filon_interpolant_jet(const FilonCoefficients& coeffs, const ExprFunction& g, const FilonPlan& plan,
                                  double x, int n) {
  Jet<double> lambda;
  Jet<double> y;
  basis_jets(g, plan, plan.nodes.front(), x, n, lambda, y);
  const Jet<double> s = (y - coeffs.shift) * (1.0 / coeffs.scale);
  Jet<double> sum = Jet<double>::constant(x, 0, n);
  for (std::size_t k = coeffs.c.size(); k-- > 0;) sum = (jet_mul(sum, s) + coeffs.c[k]).truncated(n);
  return jet_mul(lambda, sum).truncated(n);
}

std::complex<long double> filon_ld(const JetSource& f, const ExprFunction& g, double a, double b, double nu,
                                   double omega, const FilonPlan& plan) {
  plan.validate(a, b);
  if (plan.basis == FilonBasis::E) {
    for (const auto& p : find_critical_points(g, a, b)) {
      if (p.kind == CriticalKind::stationary) {
        throw ClassificationError("filon: E basis needs g' != 0; found " + describe(p));
      }
    }
    const FilonCoefficients co = filon_coeffs(f, g, a, b, plan);
    const auto d = co.monomial();
    const MomentTable mu = modified_moments(g, a, b, nu, omega, plan.size());
    Complex sum = 0;
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (d[j] == 0) continue;
      if (std::isnan(mu.values[j].real())) throw DomainError("filon: basis moment diverges");
      sum += d[j] * mu.values[j];
    }
    return sum;
  }

  if (stationary_side(g, a, b, plan.order_r) == -1) {
    return filon_ld(mirrored_source(f, a, b), mirror(g, a, b), a, b, nu, omega, mirrored_plan(plan, a, b));
  }
  const FilonCoefficients co = filon_coeffs(f, g, a, b, plan);
  const auto d = co.monomial();
  const MomentTable mu = modified_moments_stationary(g, a, b, nu, omega, plan.order_r, plan.size());
  long double dmax = 0;
  for (long double v : d) dmax = std::max(dmax, std::abs(v));
  Complex sum = 0;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (d[j] == 0) continue;
    if (std::isnan(mu.values[j].real())) {
      // A divergent basis moment is harmless only if its weight vanishes.
      if (std::abs(d[j]) <= 1e-12L * dmax) continue;
      throw DomainError("filon: basis function " + std::to_string(j) +
                        " has a divergent moment and a nonzero coefficient");
    }
    sum += d[j] * mu.values[j];
  }
  return sum;
}

std::complex<long double> filon_ld(const TransformSpec& spec, const FilonPlan& plan) {
  if (spec.f.is_zero()) return 0;
  return filon_ld(jet_source(spec.f), spec.g, spec.a, spec.b, spec.nu, spec.omega, plan);
}

std::complex<double> filon(const TransformSpec& spec, const FilonPlan& plan) { return to_d(filon_ld(spec, plan)); }

std::complex<double> asymptotic_plain(const TransformSpec& spec, int m) {
  if (m < 1) throw UsageError("asymptotic_plain: m must be at least 1");
  if (!(spec.omega > 0)) throw DomainError("asymptotic_plain: omega must be positive");
  if (spec.f.is_zero() || spec.a == spec.b) return 0;
  require_no_critical(spec.g, spec.a, spec.b, "asymptotic_plain");
  const SigmaSequence seq = sigma_plain(jet_source(spec.f), spec.g, spec.nu, m - 1, {spec.a, spec.b});
  const Complex q = -(boundary_block(seq.values, 1, spec.g, spec.b, spec.nu, spec.omega, m) -
                      boundary_block(seq.values, 0, spec.g, spec.a, spec.nu, spec.omega, m));
  return to_d(q);
}

std::complex<double> asymptotic_zero(const TransformSpec& spec, double xi, int m) {
  if (m < 1) throw UsageError("asymptotic_zero: m must be at least 1");
  if (!(spec.omega > 0)) throw DomainError("asymptotic_zero: omega must be positive");
  if (!(spec.nu > -1)) throw DomainError("asymptotic_zero: a zero of g requires nu > -1");
  if (xi < spec.a || xi > spec.b) throw UsageError("asymptotic_zero: xi outside [a, b]");
  if (spec.f.is_zero() || spec.a == spec.b) return 0;
  const auto pts = find_critical_points(spec.g, spec.a, spec.b);
  const double tol = 1e-8 * (spec.b - spec.a);
  if (pts.size() != 1 || pts.front().kind != CriticalKind::zero || std::abs(pts.front().location - xi) > tol) {
    throw ClassificationError("asymptotic_zero: oscillator is not a single-zero case at the given xi");
  }

  const SigmaSequence seq = sigma_tilde(jet_source(spec.f), spec.g, spec.nu, xi, m, {spec.a, spec.b});
  const long double w = spec.omega;
  Complex q = 0;
  for (int k = 0; k < m; ++k) {
    const double s = seq.at_critical(k);
    if (s == 0) continue;
    q += neg_power(w, k) * static_cast<long double>(s) *
         zero_case_moment_ld(spec.g, spec.a, spec.b, spec.nu + k, spec.omega);
  }
  q -= boundary_block(seq.reduced, 1, spec.g, spec.b, spec.nu, spec.omega, m);
  if (xi != spec.a) q += boundary_block(seq.reduced, 0, spec.g, spec.a, spec.nu, spec.omega, m);
  return to_d(q);
}

std::complex<double> asymptotic_stationary(const TransformSpec& spec, double zeta, int r, int m,
                                           StationaryPosition position) {
  if (m < 1) throw UsageError("asymptotic_stationary: m must be at least 1");
  if (r < 1) throw ClassificationError("asymptotic_stationary: order r must be at least 1");
  if (!(spec.omega > 0)) throw DomainError("asymptotic_stationary: omega must be positive");
  // nu = -1/(r+1) is admitted: the divergent M_0 must then carry a zero weight.
  if (spec.nu < -1.0 / (r + 1) * (1 + 1e-15)) throw DomainError("asymptotic_stationary: requires nu >= -1/(r+1)");
  if (spec.f.is_zero() || spec.a == spec.b) return 0;

  if (position == StationaryPosition::right_endpoint) {
    if (zeta != spec.b) throw UsageError("asymptotic_stationary: right endpoint position needs zeta = b");
    TransformSpec flipped = spec;
    flipped.f = mirror(spec.f, spec.a, spec.b);
    flipped.g = mirror(spec.g, spec.a, spec.b);
    return asymptotic_stationary(flipped, spec.a, r, m, StationaryPosition::left_endpoint);
  }
  if (position == StationaryPosition::left_endpoint && zeta != spec.a) {
    throw UsageError("asymptotic_stationary: left endpoint position needs zeta = a");
  }
  if (position == StationaryPosition::interior && !(zeta > spec.a && zeta < spec.b)) {
    throw UsageError("asymptotic_stationary: interior position needs a < zeta < b");
  }

  const Jet<double> gz = spec.g.eval_jet(zeta, r + 2);
  const double scale = std::max(gz.max_abs(), 1e-300);
  if (std::abs(gz[0]) > 1e-9 * scale) {
    throw ClassificationError("asymptotic_stationary: type I stationary points (g(zeta) != 0) are not supported");
  }
  for (int j = 1; j <= r; ++j) {
    if (std::abs(gz[j]) > 1e-9 * scale) {
      throw ClassificationError("asymptotic_stationary: stationary order is lower than r");
    }
  }

  const SigmaSequence seq = sigma_hat(jet_source(spec.f), spec.g, spec.nu, zeta, r, m, r, {spec.a, spec.b});
  const long double w = spec.omega;
  Complex q = 0;
  for (int k = 0; k < m; ++k) {
    const Jet<double>& jet = seq.jets_at_critical[static_cast<std::size_t>(k)];
    bool any = false;
    for (int j = 0; j <= r; ++j) any = any || jet[j] != 0;
    if (!any) continue;
    const auto M = generalized_moments(spec.g, zeta, spec.a, spec.b, spec.nu + k, spec.omega, r, r);
    Complex inner = 0;
    for (int j = 0; j <= r; ++j) {
      if (jet[j] == 0) continue;
      if (std::isnan(M[static_cast<std::size_t>(j)].real())) {
        throw DomainError("asymptotic_stationary: divergent generalized moment with nonzero weight");
      }
      inner += static_cast<long double>(jet[j]) * M[static_cast<std::size_t>(j)];
    }
    q += neg_power(w, k) * inner;
  }
  q -= boundary_block(seq.reduced, 1, spec.g, spec.b, spec.nu, spec.omega, m);
  if (position == StationaryPosition::interior) {
    q += boundary_block(seq.reduced, 0, spec.g, spec.a, spec.nu, spec.omega, m);
  }
  return to_d(q);
}

}  // namespace hankel
