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
#include "einso/realroots/sturm.hpp"
#include "einso/realroots/upoly.hpp"

using namespace einso;
using namespace einso::realroots;

namespace {

UPoly from_roots(const std::vector<Rational>& roots) {
  UPoly p{1};
  for (const auto& r : roots) p = mul(p, UPoly{-r, 1});
  return p;
}

}  // namespace

TEST_CASE("division, gcd and square-free part") {
  UPoly a = from_roots({1, 2, 2, 3});
  auto [q, r] = divmod(a, UPoly{-2, 1});
  CHECK(r.empty());
  CHECK(q == from_roots({1, 2, 3}));
  CHECK(gcd(a, derivative(a)) == UPoly{-2, 1});
  CHECK(squarefree(a) == from_roots({1, 2, 3}));
  CHECK(primitive(UPoly{Rational(1, 2), Rational(-3, 4)}) == UPoly{2, -3});
  CHECK(primitive(UPoly{Rational(-1, 2), Rational(3, 4)}) == UPoly{-2, 3});
  CHECK_THROWS_AS(divmod(a, UPoly{}), DomainError);
}

TEST_CASE("Sturm chain of x^2 - 2") {
  auto chain = sturm_sequence(UPoly{-2, 0, 1});
  REQUIRE(chain.size() == 3);
  CHECK(chain[0] == UPoly{-2, 0, 1});
  CHECK(chain[1] == UPoly{0, 2});
  CHECK(chain[2] == UPoly{2});
  CHECK(count_roots(UPoly{-2, 0, 1}, 0, 2) == 1);
  CHECK(count_roots(UPoly{-2, 0, 1}, -2, 2) == 2);
}

TEST_CASE("half-open counting at roots") {
  UPoly p = from_roots({1, 2, 3});
  CHECK(count_roots(p, 1, 3) == 2);
  CHECK(count_roots(p, 0, 1) == 1);
  CHECK(count_roots(p, 1, 2) == 1);
  CHECK(count_roots(p, Rational(3, 2), Rational(5, 2)) == 1);
  CHECK(count_roots(from_roots({1, 1, 1}), 0, 5) == 1);
}

TEST_CASE("positive root isolation") {
  UPoly p = from_roots({-1, Rational(1, 1000), Rational(1, 2), 1, 7});
  auto ivs = isolate_positive_roots(p);
  REQUIRE(ivs.size() == 4);
  std::vector<Rational> expect{Rational(1, 1000), Rational(1, 2), 1, 7};
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    CHECK(ivs[i].low > 0);
    if (ivs[i].is_exact()) {
      CHECK(ivs[i].low == expect[i]);
    } else {
      CHECK(ivs[i].low < expect[i]);
      CHECK(expect[i] <= ivs[i].high);
    }
    Rational q;
    REQUIRE(rational_root_in(p, ivs[i], q));
    CHECK(q == expect[i]);
  }
  CHECK(isolate_positive_roots(UPoly{1, 0, 1}).empty());
  CHECK(isolate_positive_roots(UPoly{0, 1}).empty());
}

TEST_CASE("refinement keeps the root and its sign change") {
  UPoly p{-2, 0, 1};
  auto ivs = isolate_positive_roots(p);
  REQUIRE(ivs.size() == 1);
  auto r = refine(p, ivs[0], Rational(1, 1000000));
  CHECK(r.high - r.low <= Rational(1, 1000000));
  CHECK(sign_at(p, r.low) * sign_at(p, r.high) <= 0);
  CHECK(to_double(r.high) == doctest::Approx(1.41421356).epsilon(1e-6));
  Rational q;
  CHECK(!rational_root_in(p, ivs[0], q));
}

TEST_CASE("interval evaluation encloses the value") {
  UPoly p{1, -3, 0, 2};
  Interval x{Rational(1, 3), Rational(1, 2)};
  auto y = evaluate(p, x, 40);
  for (int k = 0; k <= 10; ++k) {
    Rational t = x.lo + (x.hi - x.lo) * Rational(k, 10);
    CHECK(y.contains(evaluate(p, t)));
  }
}

TEST_CASE("Sturm counts agree with isolation and Descartes bounds") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> deg(1, 7), num(-20, 20), den(1, 6), mult(1, 2);
  for (int trial = 0; trial < 500; ++trial) {
    int d = deg(rng);
    std::vector<Rational> roots;
    std::vector<Rational> distinct;
    for (int i = 0; i < d; ++i) {
      Rational r(num(rng), den(rng));
      r.canonicalize();
      int m = mult(rng);
      for (int j = 0; j < m; ++j) roots.push_back(r);
      if (std::find(distinct.begin(), distinct.end(), r) == distinct.end()) distinct.push_back(r);
    }
    UPoly p = scale(from_roots(roots), Rational(num(rng) == 0 ? 3 : num(rng)));
    if (p.empty()) continue;
    int positive = 0, positive_mult = 0;
    for (const auto& r : distinct) positive += r > 0;
    for (const auto& r : roots) positive_mult += r > 0;
    auto ivs = isolate_positive_roots(p);
    CHECK(static_cast<int>(ivs.size()) == positive);
    CHECK(count_roots(p, 0, cauchy_bound(p)) == positive);
    CHECK(descartes_variations(p) >= positive_mult);
    CHECK((descartes_variations(p) - positive_mult) % 2 == 0);
    for (std::size_t i = 0; i + 1 < ivs.size(); ++i) CHECK(ivs[i].high <= ivs[i + 1].low);
  }
}
