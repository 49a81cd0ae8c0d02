#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "hankel/cli.hpp"

using hankel::parse;

TEST_CASE("method requests") {
  auto r = hankel::parse_method_request("asymptotic:m=2");
  CHECK(r.kind == hankel::MethodKind::asymptotic);
  CHECK(r.m == 2);
  CHECK(r.id() == "asymptotic_m2");
  r = hankel::parse_method_request("filon:nodes=1,4/3,5/3,2:mults=2,2,2,2");
  REQUIRE(r.nodes.size() == 4);
  CHECK(r.nodes[1] == doctest::Approx(4.0 / 3));
  CHECK(r.id() == "filon_2-2-2-2");
  r = hankel::parse_method_request("oracle:tol=1e-10:id=ref");
  CHECK(r.tol == 1e-10);
  CHECK(r.id() == "ref");
  CHECK_THROWS_AS(hankel::parse_method_request("spline:m=1"), hankel::UsageError);
  CHECK_THROWS_AS(hankel::parse_method_request("filon:q=1"), hankel::UsageError);
  CHECK_THROWS_AS(hankel::parse_int_list("2,x"), hankel::UsageError);
}

TEST_CASE("evaluate dispatches by case") {
  hankel::TransformSpec s{parse("cos(x)"), parse("x^2+x"), 1, 2, 1, 100};
  auto e = hankel::evaluate(s, hankel::parse_method_request("asymptotic:m=1"));
  CHECK(e.classification.front() == "no critical points");
  CHECK(e.expected_rate == 2.5);
  const auto o = hankel::evaluate(s, hankel::parse_method_request("oracle"));
  CHECK(o.est_abs_error < 1e-15);
  CHECK(std::abs(e.value - o.value) < 2 * std::pow(100.0, -2.5));
  s.f = parse("0");
  CHECK(hankel::evaluate(s, hankel::parse_method_request("asymptotic:m=1")).value == std::complex<double>(0));

  hankel::TransformSpec z{parse("sin(x)"), parse("x"), 0, 1, 2, 0};
  CHECK(hankel::expected_rate(z, hankel::parse_method_request("asymptotic:m=1")) == 2);
  CHECK(hankel::expected_rate(z, hankel::parse_method_request("asymptotic:m=2")) == 3.5);
  hankel::TransformSpec st{parse("exp(x)"), parse("x^2"), 0, 1, 2, 0};
  CHECK(hankel::expected_rate(st, hankel::parse_method_request("asymptotic:m=2")) == 2.5);
  CHECK(hankel::expected_rate(st, hankel::parse_method_request("filon:nodes=0,1:mults=4,2")) == 2.5);
  CHECK(hankel::expected_rate(st, hankel::parse_method_request("filon:nodes=0,1/3,2/3,1:mults=2,1,1,1")) == 1.5);
  hankel::TransformSpec m{parse("1"), parse("sin(x)"), 0, 1, 0, 0};
  CHECK(hankel::expected_rate(m, hankel::parse_method_request("filon:nodes=0,1/3,2/3,1:mults=3,1,1,3")) == 4.5);
  CHECK(hankel::expected_rate(m, hankel::parse_method_request("filon:nodes=0,1:mults=1,1")) == 2.5);
}

TEST_CASE("subdivision") {
  const auto pieces = hankel::subdivide(parse("sin(x)"), 0.5, 7);
  CHECK(pieces.size() == 4);
  CHECK(pieces.front().a == 0.5);
  CHECK(pieces.back().b == 7);
  hankel::TransformSpec s{parse("exp(x)"), parse("x^3-x"), -2, 2, 1, 150};
  // x^3 - x has three zeros and two type I stationary points
  CHECK_THROWS_AS(hankel::evaluate(s, hankel::parse_method_request("asymptotic:m=2")), hankel::ClassificationError);
  // any two critical points enclose a type I stationary point
  hankel::TransformSpec t{parse("exp(x)"), parse("sin(x)"), 0.2, 3, 1, 300};
  CHECK_THROWS_AS(hankel::evaluate(t, hankel::parse_method_request("asymptotic:m=3")), hankel::ClassificationError);
  CHECK_NOTHROW(hankel::evaluate(t, hankel::parse_method_request("oracle")));
  hankel::TransformSpec u{parse("exp(x)"), parse("x^2-1"), 0.5, 3, 1, 3000};
  const auto a = hankel::evaluate(u, hankel::parse_method_request("asymptotic:m=3"));
  const auto uref = hankel::evaluate(u, hankel::parse_method_request("oracle")).value;
  CHECK(a.expected_rate == 4);
  CHECK(std::abs(a.value - uref) <= 1e-6 * std::abs(uref));
}

TEST_CASE("filon on an interior stationary point splits the interval") {
  hankel::TransformSpec s{parse("exp(x)"), parse("x^2"), -1, 1, 2, 300};
  const auto ref = hankel::evaluate(s, hankel::parse_method_request("oracle")).value;
  const auto e = hankel::evaluate(s, hankel::parse_method_request("filon:m=2"));
  CHECK(e.pieces == 2);
  CHECK(std::abs(e.value - ref) <= 1e-5 * std::abs(ref));
}

TEST_CASE("sweep output") {
  hankel::TransformSpec s{parse("cos(x)"), parse("x^2+x"), 1, 2, 1, 0};
  hankel::SweepSettings one;
  one.points = 1;
  const auto methods = std::vector{hankel::parse_method_request("asymptotic:m=1"),
                                   hankel::parse_method_request("filon:nodes=1,2:mults=1,1")};
  std::ostringstream csv;
  hankel::write_csv(csv, hankel::sweep(s, methods, one));
  const std::string text = csv.str();
  CHECK(text.rfind("omega,method_id,value,abs_error,scaled_error\n"
                   "100,asymptotic_m1,-4.5191840224957334e-05,1.7060021567862584e-06,0.17060021567862585\n"
                   "100,filon_1-1,",
                   0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 3);

  hankel::SweepSettings set;
  set.points = 6;
  set.omega_max = 1000;
  std::ostringstream a, b;
  set.threads = 1;
  hankel::write_csv(a, hankel::sweep(s, methods, set));
  set.threads = 4;
  hankel::write_csv(b, hankel::sweep(s, methods, set));
  CHECK(a.str() == b.str());
}

TEST_CASE("moments csv") {
  std::ostringstream out;
  hankel::write_moments_csv(out, hankel::modified_moments(parse("x"), 1, 2, 1, 100, 5));
  const std::string s = out.str();
  CHECK(s.rfind("k,re,im,provenance,stable\n", 0) == 0);
  CHECK(s.find("2,0.00081106335539470607,0,recurrence,1\n") != std::string::npos);
}
