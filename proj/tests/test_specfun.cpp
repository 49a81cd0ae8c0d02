#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hankel/errors.hpp"
#include "hankel/specfun.hpp"

using hankel::bessel_j;

// mpmath, 30 digits
TEST_CASE("gamma values") {
  CHECK(hankel::gamma(5.0) == doctest::Approx(24).epsilon(1e-15));
  CHECK(hankel::gamma(1.0) == doctest::Approx(1).epsilon(1e-15));
  CHECK(hankel::gamma(0.5) == doctest::Approx(1.7724538509055160).epsilon(1e-15));
  CHECK(hankel::gamma(0.3) == doctest::Approx(2.9915689876875906283).epsilon(1e-14));
  CHECK(hankel::gamma(-2.5) == doctest::Approx(-0.94530872048294188123).epsilon(1e-14));
  CHECK(hankel::gamma(12.5) == doctest::Approx(136843365.46556585726).epsilon(1e-14));
  CHECK_THROWS_AS(hankel::gamma(0.0), hankel::DomainError);
  CHECK_THROWS_AS(hankel::gamma(-3.0), hankel::DomainError);
  CHECK(hankel::rgamma(-3.0) == 0);
}

TEST_CASE("gamma recurrence") {
  for (double x = -5.3; x < 60; x += 0.37) {
    CHECK(hankel::gamma(x + 1) / (x * hankel::gamma(x)) == doctest::Approx(1).epsilon(1e-12));
  }
}

TEST_CASE("bessel_j spot values") {
  CHECK(bessel_j(0.0, 0.0) == 1);
  CHECK(bessel_j(0.5, std::numbers::pi / 2) == doctest::Approx(2 / std::numbers::pi).epsilon(1e-15));
  CHECK(std::abs(bessel_j(0.0, 2.404825557695773)) < 1e-12);
  CHECK(bessel_j(1.0 / 3, 5.0) == doctest::Approx(-0.30642046380026416630).epsilon(1e-13));
  CHECK(bessel_j(-1.0 / 3, 5.0) == doctest::Approx(0.0043398906180296340679).epsilon(1e-11));
  CHECK(bessel_j(2.0, 1000.5) == doctest::Approx(-0.019454520576089251140).epsilon(1e-11));
  CHECK(bessel_j(2.5, 7.3) == doctest::Approx(-0.30084943158749981156).epsilon(1e-13));
  CHECK(bessel_j(-1.5, 3.0) == doctest::Approx(0.087008090720835281502).epsilon(1e-13));
  CHECK(bessel_j(7.0, 0.1) == doctest::Approx(1.5496148676202273765e-13).epsilon(1e-13));
  CHECK(bessel_j(0.3, 25.0) == doctest::Approx(0.028287780084076879481).epsilon(1e-11));
  CHECK(bessel_j(40.0, 30.0) == doctest::Approx(0.00036120236088965853089).epsilon(1e-11));
  CHECK(bessel_j(-2.0, 3.0) == doctest::Approx(bessel_j(2.0, 3.0)).epsilon(1e-15));
  CHECK_THROWS_AS(bessel_j(0.0, -1.0), hankel::DomainError);
}

TEST_CASE("bessel_j half-integer closed forms") {
  for (double x = 0.1; x <= 1e4; x *= 1.05) {
    const double p = std::sqrt(2 / (std::numbers::pi * x));
    CHECK(std::abs(bessel_j(0.5, x) - p * std::sin(x)) <= 1e-10);
    CHECK(std::abs(bessel_j(-0.5, x) - p * std::cos(x)) <= 1e-10);
    CHECK(std::abs(bessel_j(1.5, x) - p * (std::sin(x) / x - std::cos(x))) <= 1e-10);
  }
}

TEST_CASE("bessel_j three-term recurrence and envelope") {
  for (double x = 0.1; x <= 1e4; x *= 1.11) {
    for (double nu = 0; nu <= 10; nu += 0.7) {
      const double j = bessel_j(nu, x);
      const double res = bessel_j(nu - 1, x) + bessel_j(nu + 1, x) - 2 * nu / x * j;
      CHECK(std::abs(res) <= 1e-9 * std::max(1.0, std::abs(j)));
      if (x >= 10 * std::max(1.0, nu * nu)) CHECK(std::abs(j) <= 1.2 * std::sqrt(2 / (std::numbers::pi * x)));
    }
  }
}

TEST_CASE("lommel_s") {
  for (double z : {0.5, 3.0, 100.0}) {
    const auto s = hankel::lommel_s(1.0, 0.0, z);
    CHECK(s.value == 1);
    CHECK(s.est_abs_error == 0);
  }
  const auto s = hankel::lommel_s(0.0, 0.0, 100.0);
  // 1/z - 1/z^3 + 9/z^5 - ...
  CHECK(s.value == doctest::Approx(0.00999900089776).epsilon(1e-10));
  CHECK(s.est_abs_error < 1e-9);
  CHECK_THROWS_AS(hankel::lommel_s(0.0, 0.0, 0.5), hankel::AccuracyError);
}

TEST_CASE("bessel zeros") {
  CHECK(hankel::bessel_zero(0.5, 1) == doctest::Approx(std::numbers::pi).epsilon(1e-14));
  CHECK(hankel::bessel_zero(0.5, 3) == doctest::Approx(3 * std::numbers::pi).epsilon(1e-14));
  CHECK(hankel::bessel_zero(0, 1) == doctest::Approx(2.404825557695773).epsilon(1e-15));
  CHECK(hankel::bessel_zero(0, 5) == doctest::Approx(14.930917708487785948).epsilon(1e-14));
  CHECK(hankel::bessel_zero(1, 3) == doctest::Approx(10.173468135062722077).epsilon(1e-14));
  CHECK(hankel::bessel_zero(1.0 / 3, 2) == doctest::Approx(6.0327470572658419594).epsilon(1e-14));
  const auto z = hankel::bessel_zeros(2, 30);
  for (std::size_t k = 1; k < z.size(); ++k) CHECK(z[k] > z[k - 1]);
}
