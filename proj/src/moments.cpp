#include "hankel/moments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hankel/methods.hpp"
#include "hankel/oracle.hpp"
#include "hankel/specfun.hpp"
#include "hankel/transform.hpp"

namespace hankel {

namespace {

using Complex = std::complex<long double>;

bool is_integer(long double v) { return v == std::floor(v); }

long double power_moment_oracle(long double mu, long double nu, long double omega) {
  OscillatoryIntegrand in;
  in.value = [mu, nu, omega](long double x) -> Complex {
    if (x == 0) return 0;
    return std::pow(x, mu) * bessel_j(nu, omega * x);
  };
  in.phase = [omega](long double x) { return omega * x; };
  in.singularities.push_back({0.0, static_cast<double>(mu + nu)});
  return integrate_oscillatory(in, 0, 1).value.real();
}

// int_0^G y^k J_nu(omega y) dy on the e^{i nu pi} branch for G < 0.
Complex partial_power_moment(long double k, long double nu, long double omega, long double G,
                             Provenance& provenance) {
  if (G == 0) return 0;
  const long double a = std::abs(G);
  const PowerMoment pm = moment_power_detail(k, nu, omega * a);
  if (pm.provenance == Provenance::oracle) provenance = Provenance::oracle;
  // G^{k+1} for integer k; sign carried separately.
  long double scale = std::pow(a, k + 1);
  if (G < 0 && std::fmod(k + 1, 2.0L) != 0) scale = -scale;
  Complex v = scale * pm.value;
  if (G < 0) v *= phase_pi(nu);
  return v;
}

long double eval_ld(const ExprFunction& g, double x) { return g.eval(static_cast<long double>(x)); }

void check_no_stationary(const ExprFunction& g, double a, double b) {
  for (const auto& p : find_critical_points(g, a, b)) {
    if (p.kind == CriticalKind::stationary) {
      throw ClassificationError("modified_moments: g' vanishes at x = " + std::to_string(p.location));
    }
  }
}

bool any_complex(const std::vector<Complex>& v) {
  for (const auto& z : v) {
    if (z.imag() != 0) return true;
  }
  return false;
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::closed_form:
      return "closed_form";
    case Provenance::recurrence:
      return "recurrence";
    case Provenance::oracle:
      return "oracle";
  }
  return "?";
}

PowerMoment moment_power_detail(long double mu, long double nu, long double omega) {
  if (!(omega > 0)) throw DomainError("moment_power: omega must be positive");
  if (nu < 0 && is_integer(nu)) {
    PowerMoment p = moment_power_detail(mu, -nu, omega);
    if (std::fmod(-nu, 2.0L) != 0) p.value = -p.value;
    return p;
  }
  if (!(mu + nu > -1)) throw DomainError("moment_power: requires mu + nu > -1");

  // Exact antiderivative.
  if (mu == nu + 1) return {bessel_j(nu + 1, omega) / omega, Provenance::closed_form};

  const long double lead = std::pow(2.0L, mu) * gamma((nu + mu + 1) / 2) * rgamma((nu - mu + 1) / 2) /
                           std::pow(omega, mu + 1);
  try {
    const auto s1 = lommel_s(mu - 1, nu - 1, omega);
    const auto s2 = lommel_s(mu, nu, omega);
    const long double jn = bessel_j(nu, omega);
    const long double jm = bessel_j(nu - 1, omega);
    const long double rest = ((mu + nu - 1) * jn * s1.value - jm * s2.value) / std::pow(omega, mu);
    return {lead + rest, Provenance::closed_form};
  } catch (const AccuracyError&) {
    return {power_moment_oracle(mu, nu, omega), Provenance::oracle};
  }
}

double moment_power(double mu, double nu, double omega) {
  return static_cast<double>(moment_power_detail(mu, nu, omega).value);
}

MomentTable modified_moments(const ExprFunction& g, double a, double b, double nu, double omega, int n) {
  if (!(omega > 0)) throw DomainError("modified_moments: omega must be positive");
  if (n < 0) throw UsageError("modified_moments: negative count");
  MomentTable t;
  t.values.assign(static_cast<std::size_t>(n), Complex(0));
  t.provenance.assign(static_cast<std::size_t>(n), Provenance::closed_form);
  if (a == b || n == 0) {
    t.stable_upto = n - 1;
    return t;
  }
  check_no_stationary(g, a, b);

  const long double w = omega;
  const long double v = nu;
  const long double Ga = eval_ld(g, a);
  const long double Gb = eval_ld(g, b);
  const long double G = std::max(std::abs(Ga), std::abs(Gb));
  t.stable_upto = static_cast<int>(std::floor(std::sqrt(v * v + (w * G) * (w * G)) - 1));

  auto direct = [&](int k, Provenance& prov) -> Complex {
    prov = Provenance::closed_form;
    const bool splittable = k + v > -1 || (v < 0 && is_integer(v));
    if (!splittable) {
      // The split through y = 0 diverges; integrate on [a, b] directly.
      if (Ga * Gb <= 0) return std::numeric_limits<long double>::quiet_NaN();
      prov = Provenance::oracle;
      const auto r = reference_hankel(
          [g, k](long double x) {
            const Jet<long double> j = g.eval_jet(x, 2);
            return j[1] * std::pow(j[0], static_cast<long double>(k));
          },
          g, a, b, nu, omega);
      return {static_cast<long double>(r.value.real()), static_cast<long double>(r.value.imag())};
    }
    return partial_power_moment(k, v, w, Gb, prov) - partial_power_moment(k, v, w, Ga, prov);
  };

  auto jb = [&](long double order, long double G0) { return bessel_j_branch(order, w * G0); };

  for (int k = 0; k < n; ++k) {
    auto& prov = t.provenance[static_cast<std::size_t>(k)];
    if (k < 2 || k > t.stable_upto) {
      t.values[static_cast<std::size_t>(k)] = direct(k, prov);
      continue;
    }
    const int j = k - 2;
    Complex boundary = 0;
    for (const auto& [G0, sign] : {std::pair{Ga, 1.0L}, std::pair{Gb, -1.0L}}) {
      if (G0 == 0) continue;
      const Complex dj = (jb(v - 1, G0) - jb(v + 1, G0)) / 2.0L;
      boundary += sign * std::pow(G0, static_cast<long double>(j + 2)) * dj / w;
      boundary -= sign * static_cast<long double>(j + 1) / (w * w) * std::pow(G0, static_cast<long double>(j + 1)) *
                  jb(v, G0);
    }
    t.values[static_cast<std::size_t>(k)] =
        (v * v - static_cast<long double>(j + 1) * (j + 1)) / (w * w) * t.values[static_cast<std::size_t>(j)] +
        boundary;
    prov = Provenance::recurrence;
  }
  t.is_complex = any_complex(t.values);
  return t;
}

MomentTable modified_moments_stationary(const ExprFunction& g, double a, double b, double nu, double omega, int r,
                                        int n) {
  if (!(omega > 0)) throw DomainError("modified_moments_stationary: omega must be positive");
  if (r < 1) throw ClassificationError("modified_moments_stationary: order r must be at least 1");
  MomentTable t;
  t.values.assign(static_cast<std::size_t>(std::max(n, 0)), Complex(0));
  t.provenance.assign(static_cast<std::size_t>(std::max(n, 0)), Provenance::closed_form);
  if (a == b || n <= 0) {
    t.stable_upto = n - 1;
    return t;
  }
  const Jet<double> ja = g.eval_jet(a, r + 2);
  const double scale = ja.max_abs();
  for (int j = 0; j <= r; ++j) {
    if (std::abs(ja[j]) > 1e-9 * std::max(scale, 1.0)) {
      throw ClassificationError("modified_moments_stationary: no type II stationary point of order r at a");
    }
  }
  const long double gb = eval_ld(g, b);
  if (gb == 0 || ja[r + 1] == 0) throw ClassificationError("modified_moments_stationary: degenerate oscillator");
  if ((gb > 0) != (ja[r + 1] > 0)) throw ClassificationError("modified_moments_stationary: g^(r+1) changes sign");

  const long double w = omega;
  const long double v = nu;
  const long double G = std::abs(gb);
  const long double rp = r + 1;
  const Complex branch = gb > 0 ? Complex(1) : phase_pi(v + 1);
  t.stable_upto = static_cast<int>(std::floor(rp * (std::sqrt(v * v + (w * G) * (w * G)) - 1)));

  auto direct = [&](int k, Provenance& prov) -> Complex {
    const long double q = (k - r) / rp;
    if (!(q + v > -1)) return std::numeric_limits<long double>::quiet_NaN();
    const PowerMoment pm = moment_power_detail(q, v, w * G);
    prov = pm.provenance;
    return branch * std::pow(G, (k + 1) / rp) * pm.value;
  };

  const long double jn = bessel_j(v, w * G);
  const long double dj = (bessel_j(v - 1, w * G) - bessel_j(v + 1, w * G)) / 2;
  const int step = 2 * r + 2;
  for (int k = 0; k < n; ++k) {
    auto& prov = t.provenance[static_cast<std::size_t>(k)];
    const Complex& prev = k >= step ? t.values[static_cast<std::size_t>(k - step)] : Complex(0);
    if (k < step || k > t.stable_upto || std::isnan(prev.real())) {
      t.values[static_cast<std::size_t>(k)] = direct(k, prov);
      continue;
    }
    const int j = k - step;
    const long double e = (j + 1) / rp;
    const long double rhat = e * jn / (w * w) * std::pow(G, e) - dj / w * std::pow(G, e + 1);
    t.values[static_cast<std::size_t>(k)] = (v * v - e * e) / (w * w) * prev + rhat * branch;
    prov = Provenance::recurrence;
  }
  t.is_complex = any_complex(t.values);
  return t;
}

std::complex<long double> zero_case_moment_ld(const ExprFunction& g, double a, double b, double nu, double omega) {
  if (!(omega > 0)) throw DomainError("zero_case_moment: omega must be positive");
  if (a == b) return 0;
  const auto points = find_critical_points(g, a, b);
  std::vector<double> nodes{a};
  std::vector<double> zeros;
  for (const auto& p : points) {
    if (p.kind == CriticalKind::stationary) {
      throw ClassificationError("zero_case_moment: g' vanishes at x = " + std::to_string(p.location));
    }
    zeros.push_back(p.location);
    if (p.location > a && p.location < b) nodes.push_back(p.location);
  }
  if (zeros.size() > 1) throw SubdivideRequired("zero_case_moment: more than one zero", zeros);
  if (omega < kOracleCrossover) {
    const auto r = reference_hankel([](long double) { return 1.0L; }, g, a, b, nu, omega);
    return {static_cast<long double>(r.value.real()), static_cast<long double>(r.value.imag())};
  }
  nodes.push_back(b);
  // Nodes {a, xi, b} with multiplicity 3 each; a zero at an endpoint merges
  // with it and the multiplicities add.
  FilonPlan plan;
  plan.nodes = nodes;
  plan.multiplicities.assign(nodes.size(), 3);
  for (const double z : zeros) {
    if (z == a) plan.multiplicities.front() += 3;
    if (z == b) plan.multiplicities.back() += 3;
  }
  plan.basis = FilonBasis::E;
  TransformSpec spec{ExprFunction::constant(1), g, a, b, nu, omega};
  return filon_ld(spec, plan);
}

std::complex<double> zero_case_moment(const ExprFunction& g, double a, double b, double nu, double omega) {
  const auto v = zero_case_moment_ld(g, a, b, nu, omega);
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

std::vector<std::complex<long double>> generalized_moments(const ExprFunction& g, double zeta, double a, double b,
                                                           double nu, double omega, int r, int j_max) {
  if (r < 1) throw ClassificationError("generalized_moments: not a stationary case (r < 1)");
  if (!(omega > 0)) throw DomainError("generalized_moments: omega must be positive");
  if (zeta < a || zeta > b) throw UsageError("generalized_moments: zeta outside [a, b]");
  std::vector<Complex> out(static_cast<std::size_t>(j_max + 1), Complex(0));
  if (a == b) return out;

  // Monomial oscillator c (x - zeta)^(r+1)?
  const Jet<double> gj = g.eval_jet(zeta, r + 10);
  const double c = gj[r + 1];
  bool monomial = c != 0;
  for (int j = 0; monomial && j < gj.size(); ++j) {
    if (j != r + 1 && std::abs(gj[j]) > 1e-14 * std::abs(c)) monomial = false;
  }
  for (int i = 0; monomial && i <= 16; ++i) {
    const double x = a + (b - a) * i / 16.0;
    const double expect = c * std::pow(x - zeta, r + 1);
    if (std::abs(g.eval(x) - expect) > 1e-13 * std::max(std::abs(expect), std::abs(c) * std::pow(b - a, r + 1))) {
      monomial = false;
    }
  }

  const long double rp = r + 1;
  const long double v = nu;
  const long double w = omega;
  for (int j = 0; j <= j_max; ++j) {
    const long double mu = (j + 1) / rp - 1;
    if (!(mu + v > -1) && !(v < 0 && is_integer(v))) {
      out[static_cast<std::size_t>(j)] = std::numeric_limits<long double>::quiet_NaN();
      continue;
    }
    if (monomial) {
      Complex total = 0;
      // Right of zeta, then left of zeta with u = zeta - x.
      const std::pair<long double, long double> sides[] = {
          {static_cast<long double>(b) - zeta, 1.0L},
          {static_cast<long double>(zeta) - a, (j % 2 == 0) ? 1.0L : -1.0L},
      };
      for (int s = 0; s < 2; ++s) {
        const long double L = sides[s].first;
        if (L <= 0) continue;
        long double amp = c * std::pow(L, rp);
        if (s == 1 && (r + 1) % 2 == 1) amp = -amp;
        Complex part = std::pow(L, static_cast<long double>(j + 1)) / rp *
                       moment_power_detail(mu, v, w * std::abs(amp)).value;
        if (amp < 0) part *= phase_pi(v);
        total += sides[s].second * part;
      }
      out[static_cast<std::size_t>(j)] = total;
    } else {
      const long double z = zeta;
      const auto res = reference_hankel(
          [z, j](long double x) { return std::pow(x - z, static_cast<long double>(j)); }, g, a, b, nu, omega);
      out[static_cast<std::size_t>(j)] = {static_cast<long double>(res.value.real()),
                                          static_cast<long double>(res.value.imag())};
    }
  }
  return out;
}

}  // namespace hankel
