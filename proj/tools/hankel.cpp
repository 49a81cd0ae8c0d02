#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "hankel/cli.hpp"

namespace {

struct ProblemFlags {
  std::string f = "1";
  std::string g = "x";
  std::string a = "0";
  std::string b = "1";
  std::string nu = "0";
  std::string omega = "1";
};

void add_problem(CLI::App* app, ProblemFlags& p, bool with_f, bool with_omega) {
  if (with_f) app->add_option("--f", p.f, "amplitude f(x)")->required();
  app->add_option("--g", p.g, "oscillator g(x)")->required();
  app->add_option("--a", p.a, "left end")->required();
  app->add_option("--b", p.b, "right end")->required();
  app->add_option("--nu", p.nu, "Bessel order")->required();
  if (with_omega) app->add_option("--omega", p.omega, "frequency")->required();
}

double real_flag(const std::string& text) { return hankel::parse_real_list(text).at(0); }

hankel::TransformSpec make_spec(const ProblemFlags& p) {
  hankel::TransformSpec s;
  s.f = hankel::parse(p.f);
  s.g = hankel::parse(p.g);
  s.a = real_flag(p.a);
  s.b = real_flag(p.b);
  s.nu = real_flag(p.nu);
  s.omega = real_flag(p.omega);
  return s;
}

std::string num(double v) { return hankel::format_number(v); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bessel-oscillator quadrature: H_nu[f] = int_a^b f(x) J_nu(omega g(x)) dx"};
  app.require_subcommand(1);

  ProblemFlags ev;
  std::string ev_method = "asymptotic";
  int ev_m = 1;
  std::string ev_nodes, ev_mults;
  double ev_tol = 1e-13;
  auto* eval = app.add_subcommand("eval", "evaluate one transform");
  add_problem(eval, ev, true, true);
  eval->add_option("--method", ev_method, "asymptotic | filon | oracle");
  eval->add_option("--m", ev_m, "order (asymptotic) or default multiplicity (filon)");
  eval->add_option("--nodes", ev_nodes, "comma-separated Filon nodes");
  eval->add_option("--mults", ev_mults, "comma-separated multiplicities");
  eval->add_option("--tol", ev_tol, "oracle tolerance");

  ProblemFlags sw;
  std::vector<std::string> sw_methods;
  hankel::SweepSettings settings;
  std::string sw_out;
  bool full_fit = false;
  auto* sweep = app.add_subcommand("sweep", "error sweep over a geometric omega grid");
  add_problem(sweep, sw, true, false);
  sweep->add_option("--method", sw_methods, "method spec, repeatable: asymptotic:m=2, "
                                            "filon:nodes=1,2:mults=2,2, oracle:tol=1e-10 (extra keys id=, rate=)")
      ->required();
  sweep->add_option("--omega-min", settings.omega_min);
  sweep->add_option("--omega-max", settings.omega_max);
  sweep->add_option("--points", settings.points);
  sweep->add_option("--threads", settings.threads, "0 = hardware concurrency");
  sweep->add_flag("--fit-full-grid", full_fit, "fit slopes over the whole grid instead of the upper half");
  sweep->add_option("--out", sw_out, "CSV path (default stdout)");

  ProblemFlags mo;
  int count = 5;
  int stationary_r = -1;
  auto* moments = app.add_subcommand("moments", "modified moments with provenance");
  add_problem(moments, mo, false, true);
  moments->add_option("--count", count, "number of moments");
  moments->add_option("--stationary-r", stationary_r, "order r of a type II stationary point at a");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval) {
      hankel::MethodRequest req;
      req.kind = hankel::parse_method_kind(ev_method);
      req.m = ev_m;
      req.tol = ev_tol;
      if (!ev_nodes.empty()) req.nodes = hankel::parse_real_list(ev_nodes);
      if (!ev_mults.empty()) req.multiplicities = hankel::parse_int_list(ev_mults);
      if (req.kind == hankel::MethodKind::filon && !ev_nodes.empty() && ev_mults.empty()) {
        req.multiplicities.assign(req.nodes.size(), req.m);
      }
      const auto result = hankel::evaluate(make_spec(ev), req);
      std::cout << "value " << num(result.value.real()) << ' ' << num(result.value.imag()) << "i\n";
      std::cout << "method " << result.method << '\n';
      for (const auto& c : result.classification) std::cout << "case " << c << '\n';
      std::cout << "pieces " << result.pieces << '\n';
      if (req.kind == hankel::MethodKind::oracle) {
        std::cout << "est_abs_error " << num(result.est_abs_error) << '\n';
      } else {
        std::cout << "expected_rate " << num(result.expected_rate) << '\n';
      }
    } else if (*sweep) {
      std::vector<hankel::MethodRequest> reqs;
      for (const auto& m : sw_methods) reqs.push_back(hankel::parse_method_request(m));
      settings.fit_upper_half = !full_fit;
      const auto spec = make_spec(sw);
      const auto report = hankel::sweep(spec, reqs, settings);
      if (sw_out.empty()) {
        hankel::write_csv(std::cout, report);
      } else {
        std::ofstream out(sw_out, std::ios::binary);
        if (!out) throw hankel::UsageError("cannot open " + sw_out);
        hankel::write_csv(out, report);
      }
      std::ostream& log = sw_out.empty() ? std::cerr : std::cout;
      log << "# f=" << sw.f << " g=" << sw.g << " [" << sw.a << ", " << sw.b << "] nu=" << sw.nu << " omega "
          << num(settings.omega_min) << ".." << num(settings.omega_max) << " points " << settings.points
          << (full_fit ? " fit: full grid\n" : " fit: upper half of grid\n");
      hankel::write_summary(log, report);
    } else if (*moments) {
      const auto spec = make_spec(mo);
      const auto table = stationary_r >= 0
                             ? hankel::modified_moments_stationary(spec.g, spec.a, spec.b, spec.nu, spec.omega,
                                                                   stationary_r, count)
                             : hankel::modified_moments(spec.g, spec.a, spec.b, spec.nu, spec.omega, count);
      hankel::write_moments_csv(std::cout, table);
    }
  } catch (const hankel::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const hankel::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const hankel::ClassificationError& e) {
    std::cerr << "classification error: " << e.what() << '\n';
    return 2;
  } catch (const hankel::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const hankel::Error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
