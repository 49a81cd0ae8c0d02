#include "hankel/sigma.hpp"

#include <cmath>

namespace hankel {

namespace {

using Correction = std::function<Jet<double>(int k, double x, int n)>;

Jet<double> tail(const Jet<double>& a, int from) {
  return Jet<double>(a.center(), a.coeffs().tail(a.size() - from));
}

// Drops the first p coefficients of a jet that must vanish at its center.
Jet<double> drop_zero_coefficients(const Jet<double>& a, int p, const char* what) {
  const double scale = a.max_abs();
  for (int j = 0; j < p; ++j) {
    if (std::abs(a[j]) > 1e-7 * scale) {
      throw SingularityError(std::string(what) + ": coefficient " + std::to_string(j) +
                             " does not vanish at the critical point");
    }
  }
  return tail(a, p);
}

// sigma levels at a regular point, each level minus its correction before
// the next quotient.
std::vector<Jet<double>> regular_levels(const JetSource& f, const ExprFunction& g, double nu, int k_max,
                                        double x, const Correction& correction) {
  const int n = k_max + 1;
  const Jet<double> gj = g.eval_jet(x, n + 1);
  const Jet<double> gp = jet_derivative(gj);
  if (gj[0] == 0) throw SingularityError("sigma: g vanishes at the evaluation point");
  if (gp[0] == 0) throw SingularityError("sigma: g' vanishes at the evaluation point");
  std::vector<Jet<double>> levels;
  levels.push_back(f(x, n).truncated(n));
  for (int k = 1; k <= k_max; ++k) {
    const Jet<double>& s = levels.back();
    const int len = s.size();
    Jet<double> d = correction ? (s - correction(k - 1, x, len)).truncated(len) : s;
    const Jet<double> h = jet_div(d, gp.truncated(len));
    const Jet<double> q = jet_div(d, gj.truncated(len)).truncated(len - 1);
    levels.push_back(jet_derivative(h) - (nu + k) * q);
  }
  return levels;
}

void fill_points(SigmaSequence& seq, const JetSource& f, const ExprFunction& g, int k_max,
                 const Correction& correction) {
  const auto count = static_cast<Eigen::Index>(seq.points.size());
  seq.values.resize(k_max + 1, count);
  seq.reduced.resize(k_max + 1, count);
  for (Eigen::Index i = 0; i < count; ++i) {
    const double x = seq.points[static_cast<std::size_t>(i)];
    if (seq.variant != SigmaVariant::plain && x == seq.critical_point) {
      for (int k = 0; k <= k_max; ++k) {
        seq.values(k, i) = seq.jets_at_critical[static_cast<std::size_t>(k)][0];
        seq.reduced(k, i) = 0;
      }
      continue;
    }
    const auto levels = regular_levels(f, g, seq.nu, k_max, x, correction);
    for (int k = 0; k <= k_max; ++k) {
      const double v = levels[static_cast<std::size_t>(k)][0];
      seq.values(k, i) = v;
      seq.reduced(k, i) = correction ? v - correction(k, x, 1)[0] : v;
    }
  }
}

Correction make_correction(const SigmaSequence& seq) {
  if (seq.variant == SigmaVariant::plain) return {};
  if (seq.variant == SigmaVariant::tilde) {
    std::vector<double> values;
    for (const auto& jet : seq.jets_at_critical) values.push_back(jet[0]);
    return [values](int k, double x, int n) {
      return Jet<double>::constant(x, values[static_cast<std::size_t>(k)], n);
    };
  }
  const int r = seq.order_r;
  const double zeta = seq.critical_point;
  std::vector<Jet<double>> taylor;
  for (const auto& jet : seq.jets_at_critical) taylor.push_back(jet.truncated(r + 1));
  return [taylor, zeta](int k, double x, int n) {
    const Jet<double>& t = taylor[static_cast<std::size_t>(k)];
    return recenter(Jet<double>(zeta, t.coeffs()), x, n);
  };
}

}  // namespace

JetSource jet_source(const ExprFunction& f) {
  return [f](double center, int n) { return f.eval_jet(center, n); };
}

std::vector<double> sigma_plain(const ExprFunction& f, const ExprFunction& g, double nu, int k_max, double x) {
  const auto levels = regular_levels(jet_source(f), g, nu, k_max, x, {});
  std::vector<double> out;
  for (const auto& level : levels) out.push_back(level[0]);
  return out;
}

SigmaSequence sigma_plain(const JetSource& f, const ExprFunction& g, double nu, int k_max,
                          const std::vector<double>& points) {
  SigmaSequence seq;
  seq.variant = SigmaVariant::plain;
  seq.nu = nu;
  seq.points = points;
  fill_points(seq, f, g, k_max, {});
  return seq;
}

SigmaSequence sigma_tilde(const JetSource& f, const ExprFunction& g, double nu, double xi, int k_max,
                          const std::vector<double>& points) {
  SigmaSequence seq;
  seq.variant = SigmaVariant::tilde;
  seq.nu = nu;
  seq.critical_point = xi;
  seq.points = points;

  const int n = k_max + 1;
  const Jet<double> gj = g.eval_jet(xi, n + 1);
  const Jet<double> g1 = drop_zero_coefficients(gj, 1, "sigma_tilde");
  const Jet<double> gp = jet_derivative(gj);
  if (gp[0] == 0) throw SingularityError("sigma_tilde: g' vanishes at the zero of g");

  seq.jets_at_critical.push_back(f(xi, n).truncated(n));
  for (int k = 1; k <= k_max; ++k) {
    const Jet<double>& s = seq.jets_at_critical.back();
    const int len = s.size();
    typename Jet<double>::Vector dc = s.coeffs();
    dc[0] = 0;
    const Jet<double> d(xi, dc);
    const Jet<double> h = jet_div(d, gp.truncated(len));
    const Jet<double> q = jet_div(tail(d, 1), g1.truncated(len - 1));
    seq.jets_at_critical.push_back(jet_derivative(h) - (nu + k) * q);
  }
  fill_points(seq, f, g, k_max, make_correction(seq));
  return seq;
}

SigmaSequence sigma_tilde(const ExprFunction& f, const ExprFunction& g, double nu, double xi, int k_max,
                          const std::vector<double>& points) {
  return sigma_tilde(jet_source(f), g, nu, xi, k_max, points);
}

SigmaSequence sigma_hat(const JetSource& f, const ExprFunction& g, double nu, double zeta, int r, int k_max,
                        int j_max, const std::vector<double>& points) {
  if (r < 1) throw UsageError("sigma_hat: order r must be at least 1");
  SigmaSequence seq;
  seq.variant = SigmaVariant::hat;
  seq.nu = nu;
  seq.order_r = r;
  seq.critical_point = zeta;
  seq.points = points;

  j_max = std::max(j_max, r);
  const int n = k_max * (r + 1) + j_max + 1;
  const Jet<double> gj = g.eval_jet(zeta, n + 1);
  const Jet<double> gs = drop_zero_coefficients(gj, r + 1, "sigma_hat");
  const Jet<double> gps = drop_zero_coefficients(jet_derivative(gj), r, "sigma_hat");
  if (gs[0] == 0) throw SingularityError("sigma_hat: stationary order is higher than r");

  seq.jets_at_critical.push_back(f(zeta, n).truncated(n));
  for (int k = 1; k <= k_max; ++k) {
    const Jet<double>& s = seq.jets_at_critical.back();
    const int len = s.size();
    const Jet<double> ds = tail(s, r + 1);
    const int m = len - r - 1;
    const Jet<double> h = jet_mul_power(jet_div(ds, gps.truncated(m)), 1);
    const Jet<double> q = jet_div(ds, gs.truncated(m));
    seq.jets_at_critical.push_back(jet_derivative(h) - (nu + k) * q);
  }
  fill_points(seq, f, g, k_max, make_correction(seq));
  return seq;
}

SigmaSequence sigma_hat(const ExprFunction& f, const ExprFunction& g, double nu, double zeta, int r, int k_max,
                        int j_max, const std::vector<double>& points) {
  return sigma_hat(jet_source(f), g, nu, zeta, r, k_max, j_max, points);
}

std::function<double(double)> sigma_function(const JetSource& f, const ExprFunction& g, const SigmaSequence& seq,
                                             int k) {
  if (seq.variant == SigmaVariant::plain) {
    const double nu = seq.nu;
    return [f, g, nu, k](double x) { return regular_levels(f, g, nu, k, x, {})[static_cast<std::size_t>(k)][0]; };
  }
  // Near the critical point the quotients cancel badly, so there sigma_k is
  // summed from a long Taylor jet instead.
  constexpr int extra = 40;
  const SigmaSequence ext = seq.variant == SigmaVariant::tilde
                                ? sigma_tilde(f, g, seq.nu, seq.critical_point, k + extra, {})
                                : sigma_hat(f, g, seq.nu, seq.critical_point, seq.order_r, k, extra, {});
  Correction correction = make_correction(ext);
  const double nu = seq.nu;
  const double crit = seq.critical_point;
  const Jet<double> near = ext.jets_at_critical[static_cast<std::size_t>(k)];
  return [f, g, nu, k, correction, crit, near](double x) {
    if (std::abs(x - crit) <= 0.15) return near.evaluate(x);
    return regular_levels(f, g, nu, k, x, correction)[static_cast<std::size_t>(k)][0];
  };
}

}  // namespace hankel
