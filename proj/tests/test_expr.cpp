#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hankel/errors.hpp"
#include "hankel/expr.hpp"

using hankel::parse;

TEST_CASE("parse and print") {
  CHECK(parse("x^2+x").print() == "((x^2)+x)");
  CHECK(parse("sin(x)").print() == "sin(x)");
  CHECK(parse("2*x+ -3").print() == "((2*x)+(-3))");
  CHECK(parse("-x^2").eval(3.0) == -9);
  CHECK(parse("2^3^2").eval(0.0) == 512);
  CHECK(parse("besselj(0, x)").eval(0.0) == 1);
  CHECK_THROWS_AS(parse("1+"), hankel::ParseError);
  CHECK_THROWS_AS(parse("sin(x"), hankel::ParseError);
  CHECK_THROWS_AS(parse("foo(x)"), hankel::ParseError);
  CHECK_THROWS_AS(parse("besselj(x, 2)"), hankel::ParseError);
}

TEST_CASE("print round trip") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0.1, 3);
  for (const char* src : {"x^2+x", "exp(-x)*cos(3*x) - 1/x", "sqrt(x)*log(x+2)^2", "-(x-1)^3/(2+sin(x))",
                          "besselj(1/3, 2*x)*x^(1/2)"}) {
    const auto e = parse(src);
    const auto back = parse(e.print());
    for (int i = 0; i < 100; ++i) {
      const double x = u(rng);
      CHECK(back.eval(x) == e.eval(x));
    }
  }
}

TEST_CASE("taylor coefficients") {
  auto j = parse("x^2+x").eval_jet(2.0, 3);
  CHECK(j[0] == 6);
  CHECK(j[1] == 5);
  CHECK(j[2] == 1);
  j = parse("sin(x)").eval_jet(0.0, 4);
  CHECK(j[1] == doctest::Approx(1));
  CHECK(j[3] == doctest::Approx(-1.0 / 6));
  j = parse("exp(x)").eval_jet(1.0, 3);
  CHECK(j[2] == doctest::Approx(std::exp(1.0) / 2));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(hankel::check_domain(parse("log(x)"), -1, 1), hankel::DomainError);
  CHECK_THROWS_AS(hankel::check_domain(parse("sqrt(x-2)"), 0, 1), hankel::DomainError);
  CHECK_NOTHROW(hankel::check_domain(parse("log(x+1)"), 0, 1));
}

TEST_CASE("critical points") {
  CHECK(hankel::find_critical_points(parse("x^2+x"), 1, 2).empty());
  auto p = hankel::find_critical_points(parse("sin(x)"), 0, 1);
  REQUIRE(p.size() == 1);
  CHECK(p[0].kind == hankel::CriticalKind::zero);
  CHECK(p[0].location == 0);
  CHECK(p[0].at_endpoint);
  p = hankel::find_critical_points(parse("x^2"), 0, 1);
  REQUIRE(p.size() == 1);
  CHECK(p[0].kind == hankel::CriticalKind::stationary);
  CHECK(p[0].order_r == 1);
  CHECK(p[0].stationary_type == hankel::StationaryType::II);
  p = hankel::find_critical_points(parse("(x-0.5)^3"), 0, 1);
  REQUIRE(p.size() == 1);
  CHECK(p[0].order_r == 2);
  CHECK(p[0].location == doctest::Approx(0.5));
  CHECK_THROWS_AS(hankel::classify_oscillator(parse("sin(x)"), 0, 7), hankel::SubdivideRequired);
}

TEST_CASE("classification mirrors with the interval") {
  for (const char* src : {"sin(x)", "x^2-0.3", "(x-0.2)^2", "cos(3*x)"}) {
    const auto g = parse(src);
    const auto m = hankel::mirror(g, 0, 2);
    const auto p = hankel::find_critical_points(g, 0, 2);
    const auto q = hankel::find_critical_points(m, 0, 2);
    REQUIRE(p.size() == q.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      const auto& r = q[q.size() - 1 - i];
      CHECK(r.location == doctest::Approx(2 - p[i].location).epsilon(1e-10));
      CHECK(r.kind == p[i].kind);
      CHECK(r.order_r == p[i].order_r);
    }
  }
}
