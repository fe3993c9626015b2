/*
   Copyright 2026 The einso Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "einso/exact/errors.hpp"
#include "einso/exact/multipoly.hpp"
#include "einso/exact/rational.hpp"

using namespace einso;

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-12")) == "-12");
  CHECK(parse_rational("1.25") == Rational(5, 4));
  CHECK(parse_rational("-0.5") == Rational(-1, 2));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("simplest rational between bounds") {
  CHECK(simplest_between(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
  CHECK(simplest_between(Rational(31, 100), Rational(33, 100)) == Rational(5, 16));
  CHECK(simplest_between(Rational(-7, 5), Rational(-6, 5)) == Rational(-4, 3));
  CHECK(simplest_between(Rational(2), Rational(2)) == Rational(2));
  CHECK(simplest_between(Rational(1, 2), Rational(5, 2)) == Rational(1));
}

TEST_CASE("dyadic rounding brackets the input") {
  Rational q(1, 3);
  Rational lo = round_down(q, 10), hi = round_up(q, 10);
  CHECK(lo <= q);
  CHECK(q <= hi);
  CHECK(hi - lo == Rational(1, 1024));
  CHECK(round_down(Rational(-1, 3), 4) == Rational(-3, 8));
}

TEST_CASE("monomial orders") {
  Monomial a{2, 0, 1}, b{1, 3, 0};
  auto lex = MonomialOrder::lex(3);
  auto grev = MonomialOrder::grevlex(3);
  CHECK(lex.compare(a, b) > 0);
  CHECK(grev.compare(a, b) < 0);
  // grevlex tie on degree: the monomial with the smaller last exponent wins
  Monomial c{1, 1, 1}, d{2, 0, 1};
  CHECK((grev.compare(c, d) > 0) == (grev.compare(d, c) < 0));
  Monomial e{1, 2, 0}, f{2, 0, 1};
  CHECK(grev.compare(e, f) > 0);
  MonomialOrder rev(OrderKind::Lex, {2, 1, 0});
  CHECK(rev.compare(a, b) > 0);
  CHECK(rev.compare(Monomial{0, 0, 1}, Monomial{5, 5, 0}) > 0);
  CHECK_THROWS_AS(MonomialOrder(OrderKind::Lex, {0, 0, 1}), StructuralError);
  CHECK(lcm(a, b) == Monomial{2, 3, 1});
  CHECK(gcd(a, b) == Monomial{1, 0, 0});
  CHECK(a.divides(Monomial{3, 1, 1}));
  CHECK_THROWS(b / a);
}

TEST_CASE("polynomial arithmetic") {
  auto R = make_ring({"x", "y"});
  auto x = MultiPoly::variable(R, "x");
  auto one = MultiPoly::constant(R, 1);
  CHECK((x + one) * (x - one) == parse_poly("x^2 - 1", R));
  CHECK(x + MultiPoly(R) == x);
  CHECK((x - x).is_zero());
  CHECK(parse_poly("(x+y)^3", R).size() == 4);
  CHECK(parse_poly("2x y - y/3", R) == parse_poly("2*x*y - (1/3)*y", R));
  CHECK(parse_poly("x^2 - 1", R).to_string() == "x^2 - 1");
  CHECK_THROWS_AS(parse_poly("x + z", R), StructuralError);
  CHECK_THROWS_AS(make_ring({"x", "x"}), StructuralError);
}

TEST_CASE("evaluation and substitution") {
  auto R = make_ring({"x", "y"});
  auto p = parse_poly("x^2*y - 3*y + 1/2", R);
  CHECK(p.evaluate(std::map<std::string, Rational>{{"x", 2}, {"y", Rational(1, 3)}}) ==
        Rational(1, 2) + Rational(4, 3) - 1);
  CHECK_THROWS_AS(p.evaluate(std::map<std::string, Rational>{{"x", 2}}), StructuralError);
  auto S = make_ring({"t"});
  auto q = p.substitute({{"x", parse_poly("t", S)}, {"y", parse_poly("t+1", S)}}, S);
  CHECK(q == parse_poly("t^3 + t^2 - 3t - 5/2", S));
}

TEST_CASE("content, monomial content and univariate conversion") {
  auto R = make_ring({"x", "y"});
  auto [c, pp] = content_primitive(parse_poly("4x + 6", R));
  CHECK(c == 2);
  CHECK(pp == parse_poly("2x + 3", R));
  auto [c2, pp2] = content_primitive(parse_poly("-x/2 + 1/3", R));
  CHECK(c2 == Rational(-1, 6));
  CHECK(pp2 == parse_poly("3x - 2", R));
  auto m = monomial_content(parse_poly("x^2 y + x^3 y^2", R));
  CHECK(m == Monomial{2, 1});
  CHECK(divide_monomial(parse_poly("x^2 y + x^3 y^2", R), m) == parse_poly("1 + x y", R));
  auto u = to_univariate(parse_poly("x^3 - x", R), "x");
  REQUIRE(u.size() == 4);
  CHECK(u[0] == 0);
  CHECK(u[1] == -1);
  CHECK(u[3] == 1);
  CHECK(to_univariate(parse_poly("5", R), "x") == std::vector<Rational>{5});
  CHECK_THROWS_AS(to_univariate(parse_poly("x y", R), "x"), StructuralError);
  CHECK(equal_up_to_scalar(parse_poly("2x - 4", R), parse_poly("-x/3 + 2/3", R)));
  CHECK(!equal_up_to_scalar(parse_poly("x - 2", R), parse_poly("x + 2", R)));
}

namespace {

MultiPoly random_poly(const RingPtr& R, std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 5), e(0, 3), c(-9, 9), d(1, 4);
  std::vector<MultiPoly::Term> terms;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m(R->size());
    for (std::size_t v = 0; v < R->size(); ++v) m.set(v, static_cast<unsigned>(e(rng)));
    Rational q(c(rng), d(rng));
    q.canonicalize();
    terms.push_back({m, q});
  }
  return MultiPoly::from_terms(R, terms);
}

}  // namespace

TEST_CASE("ring axioms on random polynomials") {
  auto R = make_ring({"a", "b", "c"});
  std::mt19937 rng(20260101);
  std::map<std::string, Rational> pt{{"a", Rational(2, 3)}, {"b", -3}, {"c", Rational(5, 7)}};
  for (int i = 0; i < 200; ++i) {
    auto p = random_poly(R, rng), q = random_poly(R, rng), r = random_poly(R, rng);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p - p).is_zero());
    CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
    CHECK(parse_poly(p.to_string(), R) == p);
  }
}
