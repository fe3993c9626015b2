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
#include "einso/ricci/ricci.hpp"

using namespace einso;
using namespace einso::liealg;
using namespace einso::ricci;

namespace {

std::vector<Decomposition> decompositions(int n_min, int n_max, int k1_min = 1) {
  std::vector<Decomposition> out;
  for (int n = n_min; n <= n_max; ++n) {
    for (int k1 = k1_min; k1 <= n; ++k1) {
      for (int k2 = 1; k2 <= k1; ++k2) {
        int k3 = n - k1 - k2;
        if (k3 >= 1 && k3 <= k2) out.emplace_back(k1, k2, k3);
      }
    }
  }
  return out;
}

std::map<std::string, Rational> ones(const Decomposition& d) {
  std::map<std::string, Rational> m;
  for (const auto& v : metric_variables(d)) m[v] = 1;
  return m;
}

std::map<std::string, Rational> random_metric(const Decomposition& d, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(1, 40), den(1, 12);
  std::map<std::string, Rational> m;
  for (const auto& v : metric_variables(d)) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    m[v] = q;
  }
  return m;
}

RationalFunction F(const RingPtr& R, const std::string& num, const std::string& den) {
  MultiPoly d = parse_poly(den, R);
  REQUIRE(d.size() == 1);
  return RationalFunction(parse_poly(num, R) * (1 / d.terms()[0].coeff), d.terms()[0].monomial);
}

}  // namespace

TEST_CASE("metric variables follow the ansatz") {
  CHECK(metric_variables(Decomposition(3, 3, 3)) ==
        std::vector<std::string>{"x1", "x2", "x3", "x12", "x13", "x23"});
  CHECK(metric_variables(Decomposition(3, 3, 1)) ==
        std::vector<std::string>{"x1", "x2", "x12", "x13", "x23"});
  CHECK(metric_variables(Decomposition(5, 1, 1)) == std::vector<std::string>{"x1", "x12", "x13", "x23"});
}

TEST_CASE("bi-invariant metric gives 1/4 everywhere") {
  for (const auto& d : decompositions(3, 12)) {
    auto g = ricci_generic(d, triplets_bruteforce(d));
    for (const auto& [m, v] : g.evaluate(ones(d))) CHECK(v == Rational(1, 4));
    if (d.k(1) >= 2) {
      for (const auto& [m, v] : ricci_closed_form(d).evaluate(ones(d))) CHECK(v == Rational(1, 4));
    }
  }
}

TEST_CASE("closed forms equal the generic formula for n <= 12") {
  for (const auto& d : decompositions(4, 12, 2)) {
    auto g = ricci_generic(d, triplets_closed_form(d));
    auto c = ricci_closed_form(d);
    REQUIRE(g.components.size() == c.components.size());
    for (const auto& [m, r] : g.components) {
      CHECK_MESSAGE(r == c.components.at(m), "(" << d.k(1) << "," << d.k(2) << "," << d.k(3) << ") "
                                                 << label(m));
    }
  }
  CHECK_THROWS_AS(ricci_closed_form(Decomposition(1, 1, 1)), StructuralError);
}

TEST_CASE("printed components") {
  Decomposition d331(3, 3, 1);
  auto g = ricci_generic(d331, triplets_bruteforce(d331));
  auto R = g.ring;
  auto r23 = F(R, "1", "2 x23") +
             Rational(3, 20) * (F(R, "x23", "x13 x12") - F(R, "x13", "x12 x23") - F(R, "x12", "x23 x13")) -
             Rational(1, 10) * F(R, "x2", "x23^2");
  CHECK(g.components.at(Module::m23) == r23);

  Decomposition d431(4, 3, 1);
  auto c = ricci_closed_form(d431);
  auto r1 = F(c.ring, "1", "12 x1") + Rational(1, 24) * (F(c.ring, "3 x1", "x12^2") + F(c.ring, "x1", "x13^2"));
  CHECK(c.components.at(Module::m1) == r1);

  Decomposition d411(4, 1, 1);
  auto h = ricci_generic(d411, triplets_bruteforce(d411));
  auto r23b = F(h.ring, "1", "2 x23") +
              Rational(1, 4) * (F(h.ring, "x23", "x13 x12") - F(h.ring, "x13", "x12 x23") - F(h.ring, "x12", "x23 x13"));
  CHECK(h.components.at(Module::m23) == r23b);
}

TEST_CASE("scaling law") {
  for (const auto& d : decompositions(5, 9, 2)) {
    auto sys = ricci_closed_form(d);
    std::vector<std::string> names = metric_variables(d);
    names.push_back("c");
    auto S = make_ring(names);
    std::map<std::string, MultiPoly> scaled;
    for (const auto& v : metric_variables(d)) scaled.emplace(v, parse_poly("c*" + v, S));
    for (const auto& [m, r] : sys.components) {
      auto [num, den] = r.substitute(scaled, S);
      // r(c g) = r(g) / c  <=>  num(cg) * c * den(g) = num(g) * den(cg)
      MultiPoly lhs = num * parse_poly("c", S) * r.denominator_poly().to_ring(S);
      MultiPoly rhs = r.numerator().to_ring(S) * den;
      CHECK(lhs == rhs);
    }
    CHECK(scaling_law_holds(sys));
  }
}

TEST_CASE("swapping equal blocks permutes components") {
  for (auto [k, k3] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}, {4, 3}, {3, 1}, {4, 1}}) {
    Decomposition d(k, k, k3);
    auto sys = ricci_closed_form(d);
    std::map<std::string, MultiPoly> swap;
    std::map<std::string, std::string> perm{{"x1", "x2"}, {"x2", "x1"}, {"x13", "x23"}, {"x23", "x13"}};
    for (const auto& [a, b] : perm) swap.emplace(a, MultiPoly::variable(sys.ring, b));
    auto swapped = [&](Module m) {
      auto [num, den] = sys.components.at(m).substitute(swap, sys.ring);
      return std::make_pair(num, den);
    };
    auto same = [&](Module m, Module target) {
      auto [num, den] = swapped(m);
      const auto& t = sys.components.at(target);
      return num * t.denominator_poly() == t.numerator() * den;
    };
    CHECK(same(Module::m1, Module::m2));
    CHECK(same(Module::m2, Module::m1));
    CHECK(same(Module::m13, Module::m23));
    CHECK(same(Module::m23, Module::m13));
    CHECK(same(Module::m12, Module::m12));
    if (k3 >= 2) CHECK(same(Module::m3, Module::m3));
  }
}

TEST_CASE("polarized formula reproduces the diagonal components") {
  std::mt19937 rng(5);
  for (const auto& d : decompositions(4, 8, 2)) {
    auto sys = ricci_closed_form(d);
    auto metric = random_metric(d, rng);
    auto values = sys.evaluate(metric);
    for (Module m : d.nonempty_modules()) {
      auto e = d.basis_of(m).front();
      Rational norm = metric.at(variable_name(m)) * (2 * (d.n() - 2));
      CHECK(ricci_bilinear(d, metric, e, e) / norm == values.at(m));
    }
  }
}

TEST_CASE("off-diagonal Ricci vanishes for the (n-2,1,1) metrics") {
  std::map<std::string, Rational> m6{{"x1", 1}, {"x12", 2}, {"x13", 3}, {"x23", 5}};
  CHECK(ricci_offdiag_check(6, m6) == 0);
  std::mt19937 rng(8);
  for (int n = 5; n <= 9; ++n) {
    Decomposition d(n - 2, 1, 1);
    for (int trial = 0; trial < 50; ++trial) CHECK(ricci_offdiag_check(n, random_metric(d, rng)) == 0);
  }
  std::map<std::string, Rational> bad{{"x1", 1}, {"x12", 0}, {"x13", 3}, {"x23", 5}};
  CHECK_THROWS_AS(ricci_offdiag_check(6, bad), DomainError);
}

TEST_CASE("bi-invariant diagonal entries agree") {
  for (int n = 4; n <= 8; ++n) {
    Decomposition d(n - 2, 1, 1);
    auto metric = ones(d);
    Rational first;
    bool have = false;
    for (const auto& e : so_basis(n)) {
      Rational v = ricci_bilinear(d, metric, e, e);
      if (!have) first = v, have = true;
      CHECK(v == first);
    }
  }
}
