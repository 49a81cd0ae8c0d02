#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hankel/errors.hpp"
#include "hankel/sigma.hpp"

using hankel::parse;

TEST_CASE("plain sigma closed forms") {
  const auto s0 = hankel::sigma_plain(parse("exp(x)"), parse("x^2+x"), 1, 0, 1.3);
  CHECK(s0[0] == doctest::Approx(std::exp(1.3)));
  for (double nu : {0.0, 1.0, 2.5}) {
    const auto s = hankel::sigma_plain(parse("1"), parse("x"), nu, 1, 1.7);
    CHECK(s[1] == doctest::Approx(-(nu + 1) / 1.7).epsilon(1e-14));
  }
  const auto s = hankel::sigma_plain(parse("cos(x)"), parse("x^2+x"), 1, 1, 2.0);
  CHECK(s[1] == doctest::Approx(-std::sin(2.0) / 5 - 62.0 / 150 * std::cos(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(hankel::sigma_plain(parse("1"), parse("x"), 0, 1, 0.0), hankel::SingularityError);
}

TEST_CASE("tilde sigma at the zero") {
  const auto t = hankel::sigma_tilde(parse("sin(x)"), parse("x"), 2, 0, 3);
  CHECK(t.at_critical(0) == 0);
  CHECK(t.at_critical(1) == doctest::Approx(-2));
  CHECK(std::abs(t.at_critical(2)) < 1e-12);
  CHECK(std::abs(t.at_critical(3)) < 1e-12);
  // frozen from a symbolic evaluation of the recursion
  const auto u = hankel::sigma_tilde(parse("sin(x)"), parse("x"), 2, 0, 3, {1.0});
  CHECK(u.values(2, 0) == doctest::Approx(-0.00152235).epsilon(1e-5));
  CHECK(u.values(3, 0) == doctest::Approx(1.2754e-4).epsilon(1e-4));
}

TEST_CASE("hat sigma") {
  const auto h = hankel::sigma_hat(parse("exp(x)"), parse("x^2"), 2, 0, 1, 2, 1, {1.0});
  CHECK(h.values(0, 0) == doctest::Approx(std::exp(1.0)));
  CHECK(h.at_critical(0) == 1);
  // d/dx[(e^x-1-x)/(2x)] - 3(e^x-1-x)/x^2 at 1
  CHECK(h.values(1, 0) == doctest::Approx(0.5 - 3 * (std::exp(1.0) - 2)).epsilon(1e-12));
}

TEST_CASE("hat sigma dependence span") {
  const auto g = parse("x^2");
  const int r = 1, kmax = 3, jmax = 2;
  const auto base = hankel::sigma_hat(parse("cos(x)+x^5"), g, 1.5, 0, r, kmax, jmax);
  for (int j = 0; j <= jmax; ++j) {
    for (int i = 0; i < r + 1 + j; ++i) {
      const auto p = hankel::sigma_hat(parse("cos(x)+x^5 + 2.5*x^" + std::to_string(i)), g, 1.5, 0, r, kmax, jmax);
      for (int k = 1; k <= kmax; ++k) CHECK(p.at_critical(k, j) == doctest::Approx(base.at_critical(k, j)).epsilon(1e-10));
    }
  }
}

TEST_CASE("linearity in f") {
  const auto g = parse("x^2+x");
  const double a = 0.7, b = -1.9;
  const auto f1 = parse("cos(x)"), f2 = parse("exp(x)*x");
  const auto mix = parse("0.7*cos(x) - 1.9*exp(x)*x");
  const auto s1 = hankel::sigma_plain(f1, g, 1, 3, 1.4);
  const auto s2 = hankel::sigma_plain(f2, g, 1, 3, 1.4);
  const auto s = hankel::sigma_plain(mix, g, 1, 3, 1.4);
  for (int k = 0; k <= 3; ++k) CHECK(s[k] == doctest::Approx(a * s1[k] + b * s2[k]).epsilon(1e-10));
  const auto t1 = hankel::sigma_tilde(parse("sin(x)"), parse("x-0.2"), 1, 0.2, 3, {0.6});
  const auto t2 = hankel::sigma_tilde(parse("x^3"), parse("x-0.2"), 1, 0.2, 3, {0.6});
  const auto t = hankel::sigma_tilde(parse("0.7*sin(x) - 1.9*x^3"), parse("x-0.2"), 1, 0.2, 3, {0.6});
  for (int k = 0; k <= 3; ++k) CHECK(t.values(k, 0) == doctest::Approx(a * t1.values(k, 0) + b * t2.values(k, 0)).epsilon(1e-10));
}

TEST_CASE("plain sigma_k sees only f up to f^(k)") {
  const auto g = parse("x^2+x");
  const double x0 = 1.5;
  const auto base = hankel::sigma_plain(parse("cos(x)"), g, 1, 3, x0);
  for (int k = 0; k <= 3; ++k) {
    const auto p = hankel::sigma_plain(parse("cos(x) + exp(x)*(x-1.5)^" + std::to_string(k + 1)), g, 1, k, x0);
    CHECK(p[k] == doctest::Approx(base[k]).epsilon(1e-12));
  }
}
