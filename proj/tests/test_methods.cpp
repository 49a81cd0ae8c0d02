#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hankel/errors.hpp"
#include "hankel/methods.hpp"
#include "hankel/moments.hpp"
#include "hankel/oracle.hpp"

using hankel::FilonBasis;
using hankel::FilonPlan;
using hankel::parse;
using hankel::TransformSpec;

namespace {
FilonPlan plan(std::vector<double> n, std::vector<int> m, FilonBasis b = FilonBasis::E, int r = 0) {
  FilonPlan p;
  p.nodes = std::move(n);
  p.multiplicities = std::move(m);
  p.basis = b;
  p.order_r = r;
  return p;
}
double rel(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("zero amplitude gives zero") {
  TransformSpec s{parse("0"), parse("x^2+x"), 1, 2, 1, 100};
  CHECK(hankel::asymptotic_plain(s, 2) == std::complex<double>(0));
  CHECK(hankel::filon(s, plan({1, 2}, {2, 2})) == std::complex<double>(0));
  s.g = parse("x");
  s.a = 0;
  s.b = 1;
  CHECK(hankel::asymptotic_zero(s, 0, 2) == std::complex<double>(0));
  s.g = parse("x^2");
  CHECK(hankel::asymptotic_stationary(s, 0, 1, 2, hankel::StationaryPosition::left_endpoint) == std::complex<double>(0));
}

TEST_CASE("filon coefficients on a two-node plan") {
  // f = g' reproduces phi_0 exactly
  const auto c = hankel::filon_coeffs(TransformSpec{parse("2*x+1"), parse("x^2+x"), 1, 2, 1, 50}, plan({1, 2}, {1, 1}));
  REQUIRE(c.c.size() == 2);
  const auto mono = c.monomial();
  CHECK(static_cast<double>(mono[0]) == doctest::Approx(1).epsilon(1e-12));
  CHECK(std::abs(static_cast<double>(mono[1])) < 1e-12);
}

TEST_CASE("filon reproduces basis functions") {
  const auto g = parse("x^2+x");
  const auto mom = hankel::modified_moments(g, 1, 2, 1, 80, 4);
  TransformSpec s{parse("(2*x+1)*(x^2+x)"), g, 1, 2, 1, 80};
  CHECK(rel(hankel::filon(s, plan({1, 2}, {1, 1})), mom[1]) <= 1e-12);
  const FilonPlan p = plan({1, 1.5, 2}, {2, 1, 2});
  s.f = parse("(2*x+1)*(1 - 3*(x^2+x) + 0.5*(x^2+x)^3)");
  const auto co = hankel::filon_coeffs(s, p);
  for (double x : {1.0, 1.5, 2.0}) CHECK(hankel::filon_interpolant(co, g, p, x) == doctest::Approx(s.f.eval(x)).epsilon(1e-11));
  for (double x : {1.2, 1.77}) CHECK(hankel::filon_interpolant(co, g, p, x) == doctest::Approx(s.f.eval(x)).epsilon(1e-9));
}

TEST_CASE("asymptotic plain against the oracle") {
  TransformSpec s{parse("cos(x)"), parse("x^2+x"), 1, 2, 1, 100};
  const auto h = hankel::reference_hankel(s).value;
  CHECK(std::abs(hankel::asymptotic_plain(s, 2) - h) <= 1.0 * std::pow(100.0, -3.5));
  CHECK(std::abs(hankel::asymptotic_plain(s, 3) - h) < std::abs(hankel::asymptotic_plain(s, 1) - h));
  s.g = parse("x^2-2");
  CHECK_THROWS_AS(hankel::asymptotic_plain(s, 1), hankel::ClassificationError);
}

TEST_CASE("linearity in f") {
  TransformSpec a{parse("cos(x)"), parse("x^2+x"), 1, 2, 1, 150};
  TransformSpec b = a, c = a;
  b.f = parse("exp(-x)");
  c.f = parse("2*cos(x) - 3*exp(-x)");
  const auto p = plan({1, 1.5, 2}, {2, 1, 2});
  CHECK(rel(hankel::asymptotic_plain(c, 2), 2.0 * hankel::asymptotic_plain(a, 2) - 3.0 * hankel::asymptotic_plain(b, 2)) <= 1e-12);
  CHECK(rel(hankel::filon(c, p), 2.0 * hankel::filon(a, p) - 3.0 * hankel::filon(b, p)) <= 1e-10);
}

TEST_CASE("zero case") {
  TransformSpec s{parse("sin(x)"), parse("x"), 0, 1, 2, 400};
  const auto h = hankel::reference_hankel(s).value;
  CHECK(rel(hankel::asymptotic_zero(s, 0, 3), h) <= 1e-6);
  TransformSpec m{parse("1"), parse("sin(x)"), 0, 1, 0, 500};
  const auto hm = hankel::reference_hankel(m).value;
  CHECK(rel(hankel::filon(m, plan({0, 1.0 / 3, 2.0 / 3, 1}, {3, 1, 1, 3})), hm) <= 1e-7);
  // interior zero
  TransformSpec z{parse("exp(x)"), parse("x-0.4"), 0, 1, 1, 300};
  const auto hz = hankel::reference_hankel(z).value;
  CHECK(rel(hankel::asymptotic_zero(z, 0.4, 3), hz) <= 1e-5);
  CHECK(rel(hankel::filon(z, plan({0, 0.4, 1}, {2, 2, 2})), hz) <= 1e-5);
  s.nu = -1.5;
  CHECK_THROWS_AS(hankel::asymptotic_zero(s, 0, 1), hankel::DomainError);
}

TEST_CASE("stationary case") {
  TransformSpec s{parse("exp(x)"), parse("x^2"), 0, 1, 2, 300};
  const auto h = hankel::reference_hankel(s).value;
  const auto left = hankel::StationaryPosition::left_endpoint;
  CHECK(rel(hankel::asymptotic_stationary(s, 0, 1, 3, left), h) <= 1e-6);
  CHECK(rel(hankel::filon(s, plan({0, 1}, {4, 2}, FilonBasis::E_hat, 1)), h) <= 1e-5);
  // the same stationary point seen from the right end
  TransformSpec m{parse("exp(1-x)"), parse("(1-x)^2"), 0, 1, 2, 300};
  CHECK(rel(hankel::asymptotic_stationary(m, 1, 1, 3, hankel::StationaryPosition::right_endpoint), h) <= 1e-6);
  CHECK(rel(hankel::filon(m, plan({0, 1}, {2, 4}, FilonBasis::E_hat, 1)), h) <= 1e-5);
  // interior
  TransformSpec i{parse("exp(x)"), parse("x^2"), -1, 1, 2, 300};
  const auto hi = hankel::reference_hankel(i).value;
  CHECK(rel(hankel::asymptotic_stationary(i, 0, 1, 3, hankel::StationaryPosition::interior), hi) <= 1e-6);
  TransformSpec t1{parse("1"), parse("x^2+1"), -1, 1, 0, 300};
  CHECK_THROWS_AS(hankel::asymptotic_stationary(t1, 0, 1, 1, hankel::StationaryPosition::interior),
                  hankel::ClassificationError);
}

TEST_CASE("conditioning error") {
  TransformSpec s{parse("cos(x)"), parse("x^2+x"), 1, 2, 1, 100};
  CHECK_THROWS_AS(hankel::filon(s, plan({1, 2}, {22, 22})), hankel::ConditioningError);
  CHECK_THROWS_AS(hankel::filon(s, plan({1, 1 + 1e-9, 2}, {2, 2, 2})), hankel::ConditioningError);
}
