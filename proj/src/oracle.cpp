#include "hankel/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hankel {

namespace {

using Complex = std::complex<long double>;

struct Panel {
  long double lo;
  long double hi;
};

bool needs_grading(double exponent) {
  return exponent < 0 || exponent != std::floor(exponent);
}

// Geometric breakpoints accumulating at `singular` inside [lo, hi].
std::vector<long double> graded_points(long double singular, long double other, double exponent) {
  constexpr double ratio = 0.15;
  const double strength = std::max(1.0 + exponent, 0.05);
  const int levels = std::min(400, static_cast<int>(std::ceil(25.0 / (strength * std::log10(1.0 / ratio)))));
  std::vector<long double> pts;
  long double h = other - singular;
  for (int l = 1; l <= levels; ++l) {
    h *= ratio;
    pts.push_back(singular + h);
  }
  return pts;
}

void bisect_by_phase(const std::function<long double(long double)>& phase, Panel root, std::vector<Panel>& out) {
  std::vector<Panel> stack{root};
  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    long double variation = 0;
    if (phase) {
      long double prev = phase(p.lo);
      for (int i = 1; i <= 4; ++i) {
        const long double x = i == 4 ? p.hi : p.lo + (p.hi - p.lo) * i / 4;
        const long double cur = phase(x);
        variation += std::abs(cur - prev);
        prev = cur;
      }
    }
    const long double width = p.hi - p.lo;
    const long double scale = std::max(std::abs(p.lo), std::abs(p.hi));
    if (variation <= std::numbers::pi_v<long double> || width <= 1e-15L * std::max(scale, 1e-300L)) {
      out.push_back(p);
    } else {
      const long double mid = p.lo + width / 2;
      stack.push_back({mid, p.hi});
      stack.push_back({p.lo, mid});
    }
  }
}

}  // namespace

const std::vector<std::pair<long double, long double>>& gauss_legendre_15() {
  static const std::vector<std::pair<long double, long double>> rule = [] {
    constexpr int n = 15;
    std::vector<std::pair<long double, long double>> r;
    for (int i = 1; i <= n; ++i) {
      long double x = std::cos(std::numbers::pi_v<long double> * (i - 0.25L) / (n + 0.5L));
      long double dp = 0;
      for (int it = 0; it < 100; ++it) {
        long double p0 = 1;
        long double p1 = x;
        for (int k = 2; k <= n; ++k) {
          const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1);
        const long double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-21L) break;
      }
      r.emplace_back(x, 2 / ((1 - x * x) * dp * dp));
    }
    std::sort(r.begin(), r.end());
    return r;
  }();
  return rule;
}

OracleResult integrate_oscillatory(const OscillatoryIntegrand& integrand, double a, double b,
                                   const OracleOptions& options) {
  OracleResult result;
  if (a == b) {
    result.panels_used = 1;
    return result;
  }
  if (!(a < b)) throw UsageError("oracle: requires a <= b");

  if (integrand.phase) {
    // Cheap total-variation estimate for the cost guard.
    long double variation = 0;
    long double prev = integrand.phase(a);
    constexpr int samples = 256;
    for (int i = 1; i <= samples; ++i) {
      const long double x = i == samples ? static_cast<long double>(b) : a + (static_cast<long double>(b) - a) * i / samples;
      const long double cur = integrand.phase(x);
      variation += std::abs(cur - prev);
      prev = cur;
    }
    if (variation > options.max_phase_variation) {
      throw OracleError("oracle: phase variation " + std::to_string(static_cast<double>(variation)) +
                        " exceeds the cost guard");
    }
  }

  // Breakpoints: endpoints, interior singular points, and graded points.
  std::vector<long double> breaks{a, b};
  for (const auto& s : integrand.singularities) {
    if (s.location > a && s.location < b) breaks.push_back(s.location);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  auto singular_exponent = [&](long double x) -> double {
    for (const auto& s : integrand.singularities) {
      if (static_cast<long double>(s.location) == x && needs_grading(s.exponent)) return s.exponent;
    }
    return std::nan("");
  };

  std::vector<long double> all = breaks;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const long double lo = breaks[i];
    const long double hi = breaks[i + 1];
    const double e_lo = singular_exponent(lo);
    const double e_hi = singular_exponent(hi);
    const bool both = !std::isnan(e_lo) && !std::isnan(e_hi);
    const long double mid = lo + (hi - lo) / 2;
    if (both) all.push_back(mid);
    if (!std::isnan(e_lo)) {
      for (long double p : graded_points(lo, both ? mid : hi, e_lo)) all.push_back(p);
    }
    if (!std::isnan(e_hi)) {
      for (long double p : graded_points(hi, both ? mid : lo, e_hi)) all.push_back(p);
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  std::vector<Panel> panels;
  for (std::size_t i = 0; i + 1 < all.size(); ++i) bisect_by_phase(integrand.phase, {all[i], all[i + 1]}, panels);

  const auto& rule = gauss_legendre_15();
  auto integrate = [&](const std::vector<Panel>& ps, long double& l1) {
    Complex sum = 0;
    l1 = 0;
    for (const auto& p : ps) {
      const long double half = (p.hi - p.lo) / 2;
      const long double mid = p.lo + half;
      Complex s = 0;
      long double sa = 0;
      for (const auto& [x, w] : rule) {
        const Complex v = integrand.value(mid + half * x);
        s += w * v;
        sa += w * std::abs(v);
      }
      sum += half * s;
      l1 += half * sa;
    }
    return sum;
  };

  long double l1 = 0;
  Complex previous = integrate(panels, l1);
  for (int level = 1; level <= options.max_levels; ++level) {
    std::vector<Panel> refined;
    refined.reserve(panels.size() * 2);
    for (const auto& p : panels) {
      const long double mid = p.lo + (p.hi - p.lo) / 2;
      refined.push_back({p.lo, mid});
      refined.push_back({mid, p.hi});
    }
    panels = std::move(refined);
    const Complex current = integrate(panels, l1);
    const long double diff = std::abs(current - previous);
    if (diff <= options.tol * l1 || diff == 0) {
      result.value = {static_cast<double>(current.real()), static_cast<double>(current.imag())};
      result.est_abs_error = static_cast<double>(diff);
      result.panels_used = static_cast<long>(panels.size());
      result.l1_norm = static_cast<double>(l1);
      return result;
    }
    previous = current;
  }
  throw OracleError("oracle: successive levels did not agree within the tolerance");
}

OracleResult reference_hankel(const std::function<long double(long double)>& amplitude, const ExprFunction& g,
                              double a, double b, double nu, double omega, double tol) {
  if (!(omega > 0)) throw DomainError("oracle: omega must be positive");
  if (tol < 1e-13) throw UsageError("oracle: tolerance below 1e-13 is not supported");
  if (a == b) {
    OracleResult r;
    r.panels_used = 1;
    return r;
  }
  double max_g = 0;
  for (int i = 0; i <= 512; ++i) max_g = std::max(max_g, std::abs(g.eval(a + (b - a) * i / 512.0)));
  if (omega * max_g > 1e7) throw OracleError("oracle: omega * max|g| exceeds the cost guard 1e7");

  OscillatoryIntegrand in;
  const long double w = omega;
  const long double order = nu;
  in.value = [amplitude, g, w, order](long double x) {
    return amplitude(x) * bessel_j_branch(order, w * g.eval(x));
  };
  in.phase = [g, w](long double x) { return w * g.eval(x); };
  for (const auto& p : find_critical_points(g, a, b)) {
    if (p.kind == CriticalKind::zero) {
      in.singularities.push_back({p.location, nu});
    } else if (p.stationary_type == StationaryType::II) {
      in.singularities.push_back({p.location, (p.order_r + 1) * nu});
    }
  }
  OracleOptions options;
  options.tol = tol;
  return integrate_oscillatory(in, a, b, options);
}

OracleResult reference_hankel(const TransformSpec& spec, double tol) {
  if (spec.f.is_zero()) {
    OracleResult r;
    r.panels_used = 1;
    return r;
  }
  const ExprFunction f = spec.f;
  return reference_hankel([f](long double x) { return f.eval(x); }, spec.g, spec.a, spec.b, spec.nu, spec.omega,
                          tol);
}

}  // namespace hankel
