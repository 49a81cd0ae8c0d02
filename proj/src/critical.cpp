#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "hankel/expr.hpp"

namespace hankel {

namespace {

// Bracketed Newton on h with derivative dh; [lo,hi] must contain a sign change.
double polish_root(const std::function<double(double)>& h, const std::function<double(double)>& dh,
                   double lo, double hi) {
  double f_lo = h(lo);
  double f_hi = h(hi);
  if (f_lo == 0) return lo;
  if (f_hi == 0) return hi;
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double fx = h(x);
    if (fx == 0) return x;
    if (std::signbit(fx) == std::signbit(f_lo)) {
      lo = x;
      f_lo = fx;
    } else {
      hi = x;
    }
    const double d = dh(x);
    double next = (d != 0) ? x - fx / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 1e-16 * std::max(1.0, std::abs(x)) || hi - lo <= 1e-16 * std::max(1.0, std::abs(x))) {
      return next;
    }
    x = next;
  }
  return x;
}

struct Candidate {
  double x;
  bool zero;
  bool stationary;
};

}  // namespace

std::vector<CriticalPoint> find_critical_points(const ExprFunction& g, double a, double b,
                                                const ClassifyOptions& options) {
  if (!(a < b)) throw UsageError("classify_oscillator: requires a < b");
  const int panels = std::max(8, options.panels);
  std::vector<double> xs(static_cast<std::size_t>(panels) + 1);
  std::vector<double> g0(xs.size()), g1(xs.size()), g2(xs.size());
  double max_g = 0;
  double max_d = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xs[i] = i == xs.size() - 1 ? b : a + (b - a) * static_cast<double>(i) / panels;
    const Jet<double> jet = g.eval_jet(xs[i], 3);
    g0[i] = jet[0];
    g1[i] = jet[1];
    g2[i] = 2 * jet[2];
    max_g = std::max(max_g, std::abs(g0[i]));
    max_d = std::max(max_d, std::abs(g1[i]));
  }
  const double tol_g = options.zero_tol * (1 + max_g);
  const double tol_d = options.zero_tol * (1 + max_d);

  auto val = [&](double x) { return g.eval(x); };
  auto d1 = [&](double x) { return g.eval_jet(x, 2)[1]; };
  auto d2 = [&](double x) { return 2 * g.eval_jet(x, 3)[2]; };
  auto d3 = [&](double x) { return 6 * g.eval_jet(x, 4)[3]; };

  std::vector<Candidate> candidates;
  if (std::abs(g0.front()) <= tol_g) candidates.push_back({a, true, false});
  if (std::abs(g0.back()) <= tol_g) candidates.push_back({b, true, false});
  if (std::abs(g1.front()) <= tol_d) candidates.push_back({a, false, true});
  if (std::abs(g1.back()) <= tol_d) candidates.push_back({b, false, true});
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (g0[i] != 0 && g0[i + 1] != 0 && std::signbit(g0[i]) != std::signbit(g0[i + 1])) {
      candidates.push_back({polish_root(val, d1, xs[i], xs[i + 1]), true, false});
    } else if (i > 0 && g0[i] == 0) {
      candidates.push_back({xs[i], true, false});
    }
    if (g1[i] != 0 && g1[i + 1] != 0 && std::signbit(g1[i]) != std::signbit(g1[i + 1])) {
      candidates.push_back({polish_root(d1, d2, xs[i], xs[i + 1]), false, true});
    } else if (i > 0 && g1[i] == 0) {
      candidates.push_back({xs[i], false, true});
    }
    // Even-order stationary points leave g' with one sign; catch them at
    // sign changes of g''.
    if (g2[i] != 0 && g2[i + 1] != 0 && std::signbit(g2[i]) != std::signbit(g2[i + 1])) {
      const double x = polish_root(d2, d3, xs[i], xs[i + 1]);
      if (std::abs(d1(x)) <= tol_d) candidates.push_back({x, false, true});
    }
  }

  const double snap = 1e-10 * (b - a);
  for (auto& c : candidates) {
    if (std::abs(c.x - a) <= snap) c.x = a;
    if (std::abs(c.x - b) <= snap) c.x = b;
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& l, const Candidate& r) { return l.x < r.x; });

  std::vector<Candidate> merged;
  const double merge_gap = 1e-8 * (b - a);
  for (const auto& c : candidates) {
    if (!merged.empty() && c.x - merged.back().x <= merge_gap) {
      merged.back().zero = merged.back().zero || c.zero;
      if (c.stationary && !merged.back().stationary) {
        merged.back().stationary = true;
        merged.back().x = c.x;
      }
    } else {
      merged.push_back(c);
    }
  }

  std::vector<CriticalPoint> points;
  for (const auto& c : merged) {
    CriticalPoint p;
    p.location = c.x;
    p.at_endpoint = c.x == a || c.x == b;
    if (c.stationary) {
      p.kind = CriticalKind::stationary;
      const int n = 16;
      const Jet<double> jet = g.eval_jet(c.x, n);
      double scale = 0;
      const double len = b - a;
      double lp = len;
      for (int j = 1; j < n; ++j, lp *= len) scale = std::max(scale, std::abs(jet[j]) * lp);
      int r = 0;
      lp = len;
      for (int j = 1; j < n; ++j, lp *= len) {
        if (std::abs(jet[j]) * lp > options.order_tol * scale) {
          r = j - 1;
          break;
        }
      }
      if (r == 0) continue;  // g' only grazes the tolerance; not a stationary point
      p.order_r = r;
      p.stationary_type = std::abs(g.eval(c.x)) <= tol_g ? StationaryType::II : StationaryType::I;
    } else {
      p.kind = CriticalKind::zero;
    }
    points.push_back(p);
  }
  return points;
}

std::vector<CriticalPoint> classify_oscillator(const ExprFunction& g, double a, double b,
                                               const ClassifyOptions& options) {
  auto points = find_critical_points(g, a, b, options);
  if (points.size() > 1) {
    std::vector<double> locations;
    std::ostringstream msg;
    msg << "subdivide required: " << points.size() << " critical points at";
    for (const auto& p : points) {
      locations.push_back(p.location);
      msg << ' ' << p.location;
    }
    throw SubdivideRequired(msg.str(), locations);
  }
  return points;
}

std::string describe(const CriticalPoint& point) {
  std::ostringstream out;
  out.precision(17);
  if (point.kind == CriticalKind::zero) {
    out << "zero at " << point.location;
  } else {
    out << "stationary point of order " << point.order_r << ", type "
        << (point.stationary_type == StationaryType::II ? "II" : "I") << ", at " << point.location;
  }
  if (point.at_endpoint) out << " (endpoint)";
  return out.str();
}

}  // namespace hankel
