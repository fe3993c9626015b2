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
#include "einso/groebner/groebner.hpp"
#include "einso/groebner/quotient.hpp"

using namespace einso;
using namespace einso::groebner;

namespace {

std::vector<MultiPoly> parse_all(const RingPtr& R, std::vector<std::string> texts) {
  std::vector<MultiPoly> out;
  for (const auto& t : texts) out.push_back(parse_poly(t, R));
  return out;
}

MonomialOrder lex_of(const RingPtr& R, std::vector<std::string> prec) { return lex_order(*R, prec); }

}  // namespace

TEST_CASE("normal form") {
  auto R = make_ring({"x", "y"});
  auto ord = MonomialOrder::lex(2);
  CHECK(normal_form(parse_poly("x^2", R), parse_all(R, {"x"}), ord).is_zero());
  CHECK(normal_form(parse_poly("x^2 + y", R), parse_all(R, {"x"}), ord) == parse_poly("y", R));
  CHECK(normal_form(parse_poly("x y + 1", R), parse_all(R, {"2x - 1"}), ord) == parse_poly("y/2 + 1", R));
}

TEST_CASE("S-polynomials") {
  auto R = make_ring({"x", "y"});
  auto ord = MonomialOrder::lex(2);
  CHECK(s_polynomial(parse_poly("x^2 - 1", R), parse_poly("x", R), ord) == parse_poly("-1", R));
  auto f = parse_poly("3x^2 y - y + 2", R);
  CHECK(s_polynomial(f, f, ord).is_zero());
  auto s = s_polynomial(parse_poly("x y - 1", R), parse_poly("y^2 - 1", R), ord);
  CHECK(s == parse_poly("x - y", R));
}

TEST_CASE("Buchberger on small systems") {
  auto R = make_ring({"x", "y"});
  Ideal I(R, parse_all(R, {"x^2 + y^2 - 1", "x - y"}), lex_of(R, {"x", "y"}));
  auto G = buchberger(I);
  REQUIRE(G.polynomials.size() == 2);
  CHECK(G.polynomials[0] == parse_poly("2y^2 - 1", R));
  CHECK(G.polynomials[1] == parse_poly("x - y", R));
  CHECK(is_groebner(G.polynomials, G.order));

  Ideal again(R, G.polynomials, G.order);
  CHECK(buchberger(again).polynomials == G.polynomials);

  Ideal unit(R, parse_all(R, {"x^2", "x y - 1"}), lex_of(R, {"x", "y"}));
  CHECK(buchberger(unit).is_unit());
}

TEST_CASE("saturation") {
  auto R = make_ring({"x"});
  Ideal I(R, parse_all(R, {"x^2"}), MonomialOrder::lex(1));
  std::vector<std::string> vars{"x"};
  auto S = saturate(I, vars);
  CHECK(S.ring->size() == 2);
  CHECK(S.ring->name(0) == "z");
  CHECK(S.generators.back() == parse_poly("z x - 1", S.ring));
  CHECK(buchberger(S).is_unit());
  CHECK(saturate(I, std::vector<std::string>{}).generators.size() == 1);
  CHECK_THROWS_AS(saturate(S, vars), StructuralError);
}

TEST_CASE("elimination") {
  auto R = make_ring({"x", "y", "t"});
  Ideal I(R, parse_all(R, {"x - t^2", "y - t^3"}), lex_of(R, {"t", "x", "y"}));
  auto G = buchberger(I);
  std::vector<std::string> keep{"x", "y"};
  auto E = eliminate(G, keep);
  REQUIRE(E.size() == 1);
  CHECK(equal_up_to_scalar(E[0], parse_poly("x^3 - y^2", R)));
  std::vector<std::string> all{"t", "x", "y"};
  CHECK(eliminate(G, all).size() == G.polynomials.size());
  CHECK(eliminate(G, std::vector<std::string>{}).empty());
  std::vector<std::string> bad{"t"};
  CHECK_THROWS_AS(eliminate(G, bad), StructuralError);
}

TEST_CASE("budget exhaustion is an error") {
  auto R = make_ring({"x", "y", "z"});
  Ideal I(R, parse_all(R, {"x^3 - y z + 1", "y^3 - x z - 2", "z^3 - x y + 3"}), lex_of(R, {"x", "y", "z"}));
  Budget tiny;
  tiny.max_reductions = 5;
  CHECK_THROWS_AS(buchberger(I, tiny), BudgetExceeded);
  Budget little_work;
  little_work.max_work = 50;
  CHECK_THROWS_AS(buchberger(I, little_work), BudgetExceeded);
  auto G = buchberger(Ideal(R, parse_all(R, {"x^2 + y^2 + z^2 - 3", "x y - z", "x + y + z - 2"}),
                            MonomialOrder::grevlex(3)));
  CHECK(G.stats.work > 0);
  CHECK(G.stats.work < Budget{}.max_work);
}

TEST_CASE("two-stage path matches direct lex") {
  auto R = make_ring({"x", "y", "z"});
  std::vector<std::vector<std::string>> systems{
      {"x^2 + y^2 + z^2 - 3", "x y - z", "x + y + z - 2"},
      {"x^2 - 2y", "y^2 - 3 z + x", "z^2 - x y - 1"},
      {"x y z - 1", "x^2 - y", "y^2 + z - 3"},
  };
  for (const auto& sys : systems) {
    Ideal I(R, parse_all(R, sys), lex_of(R, {"x", "y", "z"}));
    auto direct = buchberger(I);
    auto staged = two_stage(I);
    CHECK(direct.polynomials == staged.polynomials);
    CHECK(is_groebner(direct.polynomials, direct.order));
    for (const auto& g : I.generators) CHECK(normal_form(g, direct.polynomials, direct.order).is_zero());
  }
}

TEST_CASE("quotient algebra and minimal polynomials") {
  auto R = make_ring({"x", "y"});
  Ideal I(R, parse_all(R, {"x^2 - 2", "y^2 - 3"}), grevlex_order(*R, std::vector<std::string>{"x", "y"}));
  auto G = buchberger(I);
  Quotient q(G);
  CHECK(q.dimension() == 4);
  auto mu = q.minimal_polynomial(parse_poly("x + y", R));
  // (x+y) = sqrt2 + sqrt3 has minimal polynomial t^4 - 10 t^2 + 1
  CHECK(mu == realroots::UPoly{1, 0, -10, 0, 1});
  auto c = q.express_in_powers(parse_poly("x + y", R), parse_poly("x", R));
  REQUIRE(c.has_value());
  // x = (t^3 - 9 t) / 2 for t = x + y
  CHECK(*c == realroots::UPoly{0, Rational(-9, 2), 0, Rational(1, 2)});
}

TEST_CASE("determinism and membership on random systems") {
  auto R = make_ring({"a", "b", "c"});
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coef(-3, 3), ex(0, 2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<MultiPoly> gens;
    for (int g = 0; g < 3; ++g) {
      std::vector<MultiPoly::Term> terms;
      for (int k = 0; k < 4; ++k) {
        Monomial m{static_cast<unsigned>(ex(rng)), static_cast<unsigned>(ex(rng)), static_cast<unsigned>(ex(rng))};
        terms.push_back({m, Rational(coef(rng))});
      }
      gens.push_back(MultiPoly::from_terms(R, terms));
    }
    Ideal I(R, gens, grevlex_order(*R, std::vector<std::string>{"a", "b", "c"}));
    auto G1 = buchberger(I);
    auto G2 = buchberger(I);
    CHECK(G1.polynomials == G2.polynomials);
    CHECK(is_groebner(G1.polynomials, G1.order));
    for (const auto& g : I.generators) CHECK(normal_form(g, G1.polynomials, G1.order).is_zero());
  }
}
