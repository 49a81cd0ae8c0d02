#include "hankel/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hankel/oracle.hpp"

namespace hankel {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::string trim(const std::string& s) {
  const auto lo = s.find_first_not_of(" \t");
  if (lo == std::string::npos) return {};
  const auto hi = s.find_last_not_of(" \t");
  return s.substr(lo, hi - lo + 1);
}

std::string join_ints(const std::vector<int>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

FilonPlan make_plan(std::vector<double> nodes, std::vector<int> mults) {
  // Coincident nodes merge; their multiplicities add.
  FilonPlan plan;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!plan.nodes.empty() && nodes[i] == plan.nodes.back()) {
      plan.multiplicities.back() += mults[i];
    } else {
      plan.nodes.push_back(nodes[i]);
      plan.multiplicities.push_back(mults[i]);
    }
  }
  return plan;
}

bool is_stationary_end(const CriticalPoint& p, double a, double b) {
  return p.kind == CriticalKind::stationary && (p.location == a || p.location == b);
}

void require_supported(const CriticalPoint& p) {
  if (p.kind == CriticalKind::stationary && p.stationary_type != StationaryType::II) {
    throw ClassificationError("type I stationary point (g(zeta) != 0) is not supported: " + describe(p));
  }
}

// Filon plan for one piece, either the user's or the default one.
FilonPlan piece_plan(const Piece& piece, const MethodRequest& req, bool whole) {
  if (!req.nodes.empty()) {
    if (!whole) throw UsageError("explicit --nodes cannot be combined with automatic subdivision");
    if (req.nodes.size() != req.multiplicities.size()) throw UsageError("--nodes and --mults differ in length");
    FilonPlan plan = make_plan(req.nodes, req.multiplicities);
    if (piece.point && piece.point->kind == CriticalKind::zero &&
        std::find(plan.nodes.begin(), plan.nodes.end(), piece.point->location) == plan.nodes.end()) {
      throw UsageError("filon: the zero of g at " + format_number(piece.point->location) + " must be a node");
    }
    return plan;
  }
  const int m = req.m;
  if (!piece.point) return make_plan({piece.a, piece.b}, {m, m});
  const CriticalPoint& p = *piece.point;
  if (p.kind == CriticalKind::zero) return make_plan({piece.a, p.location, piece.b}, {m, m, m});
  const int heavy = m * (p.order_r + 1);
  return p.location == piece.a ? make_plan({piece.a, piece.b}, {heavy, m}) : make_plan({piece.a, piece.b}, {m, heavy});
}

int filon_order(const FilonPlan& plan, const std::optional<CriticalPoint>& point) {
  const int m0 = plan.multiplicities.front();
  const int md = plan.multiplicities.back();
  if (!point) return std::min(m0, md);
  if (point->kind == CriticalKind::zero) {
    int mz = m0;
    for (std::size_t i = 0; i < plan.nodes.size(); ++i) {
      if (plan.nodes[i] == point->location) mz = plan.multiplicities[i];
    }
    return std::min({m0, md, mz});
  }
  const int rp = point->order_r + 1;
  return point->location == plan.nodes.front() ? std::min(md, m0 / rp) : std::min(m0, md / rp);
}

// sigma-tilde_m(xi) of `f` relative to the size of the lower ones.
bool sigma_tilde_vanishes(const JetSource& f, const ExprFunction& g, double nu, double xi, int m) {
  const SigmaSequence seq = sigma_tilde(f, g, nu, xi, m, {});
  double scale = 0;
  for (int k = 0; k <= m; ++k) scale = std::max(scale, std::abs(seq.at_critical(k)));
  return std::abs(seq.at_critical(m)) <= 1e-10 * std::max(scale, 1.0);
}

double piece_rate(const TransformSpec& spec, const Piece& piece, const MethodRequest& req, bool whole) {
  if (req.kind == MethodKind::oracle) return 0;
  const std::optional<CriticalPoint>& p = piece.point;
  if (req.kind == MethodKind::asymptotic) {
    if (!p) return req.m + 1.5;
    if (p->kind == CriticalKind::zero) {
      return sigma_tilde_vanishes(jet_source(spec.f), spec.g, spec.nu, p->location, req.m) ? req.m + 1.5 : req.m + 1;
    }
    return req.m + 1.0 / (p->order_r + 1);
  }
  const FilonPlan plan = piece_plan(piece, req, whole);
  const int m = filon_order(plan, p);
  if (!p) return m + 1.5;
  if (p->kind == CriticalKind::zero) {
    // The rate depends on whether sigma-tilde_m[f - p] vanishes at xi.
    FilonPlan e = plan;
    e.basis = FilonBasis::E;
    const FilonCoefficients co = filon_coeffs(jet_source(spec.f), spec.g, piece.a, piece.b, e);
    const ExprFunction f = spec.f;
    const ExprFunction g = spec.g;
    const JetSource residual = [f, g, co, e](double x, int n) {
      return f.eval_jet(x, n) - filon_interpolant_jet(co, g, e, x, n);
    };
    return sigma_tilde_vanishes(residual, spec.g, spec.nu, p->location, m) ? m + 1.5 : m + 1;
  }
  return m + 1.0 / (p->order_r + 1);
}

// Interior type II stationary points are split for Filon, which needs them at an end.
std::vector<Piece> dispatch_pieces(const TransformSpec& spec, const MethodRequest& req) {
  std::vector<Piece> pieces = subdivide(spec.g, spec.a, spec.b);
  if (req.kind != MethodKind::filon) return pieces;
  std::vector<Piece> out;
  for (const auto& piece : pieces) {
    if (piece.point && piece.point->kind == CriticalKind::stationary && !is_stationary_end(*piece.point, piece.a, piece.b)) {
      CriticalPoint left = *piece.point;
      left.at_endpoint = true;
      out.push_back({piece.a, left.location, left});
      out.push_back({left.location, piece.b, left});
    } else {
      out.push_back(piece);
    }
  }
  return out;
}

std::complex<double> run_piece(const TransformSpec& spec, const Piece& piece, const MethodRequest& req, bool whole,
                               const std::vector<double>& user_nodes, const std::vector<int>& user_mults) {
  TransformSpec s = spec;
  s.a = piece.a;
  s.b = piece.b;
  if (req.kind == MethodKind::asymptotic) {
    if (!piece.point) return asymptotic_plain(s, req.m);
    const CriticalPoint& p = *piece.point;
    if (p.kind == CriticalKind::zero) return asymptotic_zero(s, p.location, req.m);
    StationaryPosition pos = StationaryPosition::interior;
    if (p.location == piece.a) pos = StationaryPosition::left_endpoint;
    if (p.location == piece.b) pos = StationaryPosition::right_endpoint;
    return asymptotic_stationary(s, p.location, p.order_r, req.m, pos);
  }
  MethodRequest r = req;
  r.nodes = user_nodes;
  r.multiplicities = user_mults;
  FilonPlan plan = piece_plan(piece, r, whole);
  if (piece.point && piece.point->kind == CriticalKind::stationary) {
    plan.basis = FilonBasis::E_hat;
    plan.order_r = piece.point->order_r;
  }
  return filon(s, plan);
}

}  // namespace

std::string MethodRequest::id() const {
  if (!label.empty()) return label;
  switch (kind) {
    case MethodKind::asymptotic:
      return "asymptotic_m" + std::to_string(m);
    case MethodKind::filon:
      if (multiplicities.empty()) return "filon_m" + std::to_string(m);
      return "filon_" + join_ints(multiplicities, '-');
    case MethodKind::oracle:
      return "oracle";
  }
  return "?";
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& part : split(text, ',')) {
    const std::string t = trim(part);
    if (t.empty()) throw UsageError("empty entry in list '" + text + "'");
    const ExprFunction e = parse(t);
    if (e.depends_on_x()) throw UsageError("list entry '" + t + "' must be constant");
    out.push_back(e.eval(0.0));
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : split(text, ',')) {
    const std::string t = trim(part);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (t.empty() || used != t.size()) throw UsageError("'" + t + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

MethodRequest parse_method_request(const std::string& text) {
  const auto fields = split(text, ':');
  if (fields.empty()) throw UsageError("empty method");
  MethodRequest req;
  req.kind = parse_method_kind(trim(fields[0]));
  for (std::size_t i = 1; i < fields.size(); ++i) {
    const auto eq = fields[i].find('=');
    if (eq == std::string::npos) throw UsageError("method option '" + fields[i] + "' needs key=value");
    const std::string key = trim(fields[i].substr(0, eq));
    const std::string value = trim(fields[i].substr(eq + 1));
    if (key == "m") {
      req.m = parse_int_list(value).at(0);
    } else if (key == "nodes") {
      req.nodes = parse_real_list(value);
    } else if (key == "mults") {
      req.multiplicities = parse_int_list(value);
    } else if (key == "tol") {
      req.tol = parse_real_list(value).at(0);
    } else if (key == "rate") {
      req.rate = parse_real_list(value).at(0);
    } else if (key == "id") {
      if (value.find(',') != std::string::npos) throw UsageError("method id must not contain commas");
      req.label = value;
    } else {
      throw UsageError("unknown method option '" + key + "'");
    }
  }
  if (req.m < 1) throw UsageError("m must be at least 1");
  return req;
}

std::vector<Piece> subdivide(const ExprFunction& g, double a, double b) {
  const auto points = find_critical_points(g, a, b);
  if (points.size() <= 1) {
    Piece p{a, b, {}};
    if (!points.empty()) p.point = points.front();
    return {p};
  }
  std::vector<Piece> pieces;
  double lo = a;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double hi = i + 1 < points.size() ? (points[i].location + points[i + 1].location) / 2 : b;
    CriticalPoint p = points[i];
    p.at_endpoint = p.location == lo || p.location == hi;
    pieces.push_back({lo, hi, p});
    lo = hi;
  }
  return pieces;
}

double expected_rate(const TransformSpec& spec, const MethodRequest& request) {
  if (request.rate) return *request.rate;
  if (request.kind == MethodKind::oracle) return 0;
  const auto pieces = dispatch_pieces(spec, request);
  double rate = INFINITY;
  for (const auto& piece : pieces) {
    if (piece.point) require_supported(*piece.point);
    rate = std::min(rate, piece_rate(spec, piece, request, pieces.size() == 1));
  }
  return rate;
}

Evaluation evaluate(const TransformSpec& spec, const MethodRequest& request) {
  if (!(spec.a < spec.b)) throw UsageError("need a < b");
  if (!(spec.omega > 0)) throw DomainError("omega must be positive");
  check_domain(spec.f, spec.a, spec.b);
  check_domain(spec.g, spec.a, spec.b);
  Evaluation ev;
  ev.method = request.id();
  for (const auto& p : find_critical_points(spec.g, spec.a, spec.b)) ev.classification.push_back(describe(p));
  if (ev.classification.empty()) ev.classification.emplace_back("no critical points");

  if (request.kind == MethodKind::oracle) {
    const OracleResult r = reference_hankel(spec, request.tol);
    ev.value = r.value;
    ev.est_abs_error = r.est_abs_error;
    return ev;
  }
  const auto pieces = dispatch_pieces(spec, request);
  ev.pieces = static_cast<int>(pieces.size());
  for (const auto& piece : pieces) {
    if (piece.point) require_supported(*piece.point);
  }
  const bool whole = pieces.size() == 1;
  if (!request.nodes.empty() && pieces.size() == 2 && subdivide(spec.g, spec.a, spec.b).size() == 1) {
    // An interior stationary point split for Filon: divide the user's nodes.
    const double z = pieces.front().b;
    std::vector<double> ln, rn;
    std::vector<int> lm, rm;
    for (std::size_t i = 0; i < request.nodes.size(); ++i) {
      if (request.nodes[i] <= z) ln.push_back(request.nodes[i]), lm.push_back(request.multiplicities.at(i));
      if (request.nodes[i] >= z) rn.push_back(request.nodes[i]), rm.push_back(request.multiplicities.at(i));
    }
    if (ln.empty() || ln.back() != z) throw UsageError("filon: the interior stationary point must be a node");
    ev.value = run_piece(spec, pieces[0], request, true, ln, lm) + run_piece(spec, pieces[1], request, true, rn, rm);
  } else {
    for (const auto& piece : pieces) {
      ev.value += run_piece(spec, piece, request, whole, request.nodes, request.multiplicities);
    }
  }
  ev.expected_rate = expected_rate(spec, request);
  return ev;
}

SweepReport sweep(const TransformSpec& spec, const std::vector<MethodRequest>& methods,
                  const SweepSettings& settings) {
  if (methods.empty()) throw UsageError("sweep: no methods given");
  const auto grid = geometric_grid(settings.omega_min, settings.omega_max, settings.points);
  double max_g = 0;
  for (int i = 0; i <= 512; ++i) max_g = std::max(max_g, std::abs(spec.g.eval(spec.a + (spec.b - spec.a) * i / 512.0)));

  std::vector<SweepMethod> runs;
  std::size_t finest = 0;
  double finest_rate = -INFINITY;
  for (std::size_t i = 0; i < methods.size(); ++i) {
    const MethodRequest req = methods[i];
    TransformSpec probe = spec;
    probe.omega = grid.front();
    const double rate = expected_rate(probe, req);
    if (rate > finest_rate) {
      finest_rate = rate;
      finest = i;
    }
    runs.push_back({req.id(), [spec, req](double w) {
                      TransformSpec s = spec;
                      s.omega = w;
                      return evaluate(s, req).value;
                    },
                    rate});
  }
  const MethodRequest fallback = methods[finest];
  auto reference = [spec, max_g, fallback](double w) {
    TransformSpec s = spec;
    s.omega = w;
    if (w * max_g <= 1e7) {
      const OracleResult r = reference_hankel(s);
      return Reference{r.value, r.est_abs_error};
    }
    return Reference{evaluate(s, fallback).value, 0};
  };
  SweepOptions options;
  options.threads = settings.threads;
  options.fit_upper_half = settings.fit_upper_half;
  return run_sweep(grid, reference, runs, options);
}

void write_summary(std::ostream& out, const SweepReport& report) {
  for (const auto& s : report.summaries) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s: slope %.3f +- %.3f (expected %.3f), scaled spread %.3g, clamped %d\n",
                  s.id.c_str(), s.fit.slope, s.fit.half_width, -s.expected_rate, s.scaled_spread, s.clamped);
    out << buf;
  }
}

void write_moments_csv(std::ostream& out, const MomentTable& table) {
  out << "k,re,im,provenance,stable\n";
  for (std::size_t k = 0; k < table.size(); ++k) {
    const auto v = table[k];
    out << k << ',' << format_number(v.real()) << ',' << format_number(v.imag()) << ',' << to_string(table.provenance[k])
        << ',' << (static_cast<int>(k) <= table.stable_upto ? 1 : 0) << '\n';
  }
}

}  // namespace hankel
