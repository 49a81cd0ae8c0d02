#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "hankel/applications.hpp"
#include "hankel/sweep.hpp"

using hankel::parse;

TEST_CASE("airy from two Bessel functions") {
  CHECK(static_cast<double>(hankel::airy_ai_neg(0)) == doctest::Approx(0.35502805388781723926).epsilon(1e-15));
  CHECK(static_cast<double>(hankel::airy_ai_neg(2.5)) == doctest::Approx(-0.112325067692966).epsilon(1e-12));
}

TEST_CASE("airy transform") {
  const auto one = parse("1");
  CHECK(hankel::airy_transform(parse("0"), 1, 100) == std::complex<double>(0));
  const double ref = 0.00664226025997978359043;
  CHECK(hankel::airy_reference(one, 1, 100).real() == doctest::Approx(ref).epsilon(1e-12));
  CHECK(hankel::airy_transform(one, 1, 100).real() == doctest::Approx(ref).epsilon(1e-6));
  hankel::AiryOptions f;
  f.method = hankel::MethodKind::filon;
  CHECK(hankel::airy_transform(one, 1, 100, f).real() == doctest::Approx(ref).epsilon(1e-6));
  CHECK(1e3 * hankel::airy_transform(one, 1, 1e3).real() == doctest::Approx(0.669299681709029328).epsilon(1e-8));
  const auto a = hankel::airy_transform(parse("cos(x)"), 1, 300);
  const auto b = hankel::airy_transform(parse("x^2"), 1, 300);
  const auto c = hankel::airy_transform(parse("2*cos(x) - x^2"), 1, 300);
  CHECK(std::abs(c - (2.0 * a - b)) <= 1e-12 * std::abs(c));
  const auto r = hankel::airy_reference(parse("cos(x)"), 1, 300).value;
  CHECK(std::abs(a - r) <= 1e-6 * std::abs(r));
}

TEST_CASE("fourier-bessel orthogonality") {
  char src[64];
  std::snprintf(src, sizeof src, "besselj(0, %.17g*x)", hankel::bessel_zero(0, 1));
  const auto s = hankel::fourier_bessel_coeffs(parse(src), 1, 0, 40);
  CHECK(s.coeffs[0] == doctest::Approx(1).epsilon(1e-6));
  for (std::size_t k = 1; k < s.coeffs.size(); ++k) CHECK(std::abs(s.coeffs[k]) <= 1e-6);
  const auto z = hankel::fourier_bessel_coeffs(parse("0"), 1, 0, 5);
  for (double a : z.coeffs) CHECK(a == 0);
}

TEST_CASE("fourier-bessel filon against the oracle") {
  const double j5 = hankel::bessel_zero(0, 5);
  hankel::TransformSpec s{parse("x*(1-x^2)"), parse("x"), 0, 1, 0, j5};
  hankel::FilonPlan p;
  p.nodes = {0, 1};
  p.multiplicities = {4, 4};
  CHECK(hankel::filon(s, p).real() == doctest::Approx(0.000248209377359040499443).epsilon(1e-7));
}

TEST_CASE("fourier-bessel integrals decay like j^(-3/2)") {
  const auto s = hankel::fourier_bessel_coeffs(parse("1+cos(x)"), 1, 0, 100);
  std::vector<double> js, is;
  for (int k = 9; k < 100; ++k) {
    const double j = s.zeros_used[k];
    const double norm = hankel::bessel_j(1.0, j);
    js.push_back(j);
    is.push_back(std::abs(s.coeffs[k]) * norm * norm / 2);
  }
  CHECK(std::abs(hankel::fit_loglog(js, is).slope + 1.5) <= 0.2);
}
