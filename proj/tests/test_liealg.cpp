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

#include <map>
#include <set>

#include "einso/exact/errors.hpp"
#include "einso/liealg/liealg.hpp"

using namespace einso;
using namespace einso::liealg;

namespace {

// Sparse vectors in the e_ab basis.
using Vec = std::map<std::pair<int, int>, int>;

Vec bracket_vec(const Vec& x, const Vec& y) {
  Vec out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) {
      auto r = bracket({a.first, a.second}, {b.first, b.second});
      if (!r) continue;
      out[{r->element.a, r->element.b}] += r->sign * ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Vec add(Vec a, const Vec& b) {
  for (const auto& [k, v] : b) a[k] += v;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

Vec unit(const BasisElement& e) { return Vec{{{e.a, e.b}, 1}}; }

}  // namespace

TEST_CASE("brackets of basis elements") {
  auto r = bracket({1, 2}, {2, 3});
  REQUIRE(r);
  CHECK(r->sign == 1);
  CHECK(r->element == BasisElement{1, 3});
  CHECK(!bracket({1, 2}, {3, 4}));
  r = bracket({1, 2}, {1, 3});
  REQUIRE(r);
  CHECK(r->sign == -1);
  CHECK(r->element == BasisElement{2, 3});
  CHECK(!bracket({1, 2}, {1, 2}));
}

TEST_CASE("antisymmetry and Jacobi identity, exhaustive for n <= 8") {
  for (int n = 3; n <= 8; ++n) {
    auto B = so_basis(n);
    CHECK(B.size() == static_cast<std::size_t>(n * (n - 1) / 2));
    bool ok = true;
    for (const auto& x : B) {
      for (const auto& y : B) {
        auto xy = bracket_vec(unit(x), unit(y));
        auto yx = bracket_vec(unit(y), unit(x));
        if (!add(xy, yx).empty()) ok = false;
        for (const auto& z : B) {
          Vec j = add(add(bracket_vec(unit(x), bracket_vec(unit(y), unit(z))),
                          bracket_vec(unit(y), bracket_vec(unit(z), unit(x)))),
                      bracket_vec(unit(z), bracket_vec(unit(x), unit(y))));
          if (!j.empty()) ok = false;
        }
      }
    }
    CHECK_MESSAGE(ok, "n = " << n);
    CHECK(bracket_identities_hold(n));
  }
}

TEST_CASE("module assignment") {
  Decomposition d(3, 3, 1);
  CHECK(d.module_of({1, 2}) == Module::m1);
  CHECK(d.module_of({4, 5}) == Module::m2);
  CHECK(d.module_of({1, 4}) == Module::m12);
  CHECK(d.module_of({1, 7}) == Module::m13);
  CHECK(d.module_of({4, 7}) == Module::m23);
  CHECK(d.dim(Module::m3) == 0);
  CHECK(d.basis_of(Module::m3).empty());
  Decomposition e(4, 1, 1);
  CHECK(e.dim(Module::m2) == 0);
  CHECK(e.basis_of(Module::m23) == std::vector<BasisElement>{{5, 6}});
  CHECK_THROWS_AS(Decomposition(1, 3, 3), StructuralError);
  CHECK_THROWS_AS(Decomposition(3, 3, 0), StructuralError);
  for (int n = 3; n <= 12; ++n) {
    for (int k1 = 1; k1 <= n; ++k1) {
      for (int k2 = 1; k2 <= k1; ++k2) {
        int k3 = n - k1 - k2;
        if (k3 < 1 || k3 > k2) continue;
        Decomposition dd(k1, k2, k3);
        int total = 0;
        for (Module m : kModules) total += dd.dim(m);
        CHECK(total == n * (n - 1) / 2);
      }
    }
  }
}

TEST_CASE("triplet values") {
  auto t = triplets_bruteforce(Decomposition(3, 3, 1));
  CHECK(t.get(Module::m1, Module::m1, Module::m1) == Rational(3, 5));
  CHECK(t.get(Module::m13, Module::m12, Module::m23) == Rational(9, 10));
  CHECK(t.get(Module::m1, Module::m12, Module::m12) == Rational(9, 5));
  CHECK(triplets_bruteforce(Decomposition(2, 2, 2)).get(Module::m1, Module::m1, Module::m1) == 0);
  CHECK(triplets_closed_form(Decomposition(4, 3, 1)).get(Module::m1, Module::m12, Module::m12) == 3);

  auto e = triplets_closed_form(Decomposition(6, 1, 1)).entries();
  std::set<std::array<Module, 3>> keys;
  for (const auto& entry : e) keys.insert(entry.triple);
  std::set<std::array<Module, 3>> expect{{Module::m1, Module::m1, Module::m1},
                                         {Module::m1, Module::m12, Module::m12},
                                         {Module::m1, Module::m13, Module::m13},
                                         {Module::m12, Module::m13, Module::m23}};
  CHECK(keys == expect);
}

TEST_CASE("brute force equals closed form and is symmetric for n <= 12") {
  for (int n = 3; n <= 12; ++n) {
    for (int k1 = 1; k1 <= n; ++k1) {
      for (int k2 = 1; k2 <= k1; ++k2) {
        int k3 = n - k1 - k2;
        if (k3 < 1 || k3 > k2) continue;
        Decomposition d(k1, k2, k3);
        auto bf = triplets_bruteforce(d);
        CHECK_MESSAGE(bf == triplets_closed_form(d), "(" << k1 << "," << k2 << "," << k3 << ")");
        CHECK(bf.is_symmetric());
        for (int i = 1; i <= 3; ++i) {
          if (d.k(i) <= 2) CHECK(bf.get(Module(i - 1), Module(i - 1), Module(i - 1)) == 0);
        }
      }
    }
  }
}

TEST_CASE("bracket relations between modules, exhaustive for n <= 8") {
  using M = Module;
  // allowed targets of [a, b]
  std::map<std::pair<M, M>, std::set<M>> rel{
      {{M::m1, M::m1}, {M::m1}},       {{M::m2, M::m2}, {M::m2}},
      {{M::m3, M::m3}, {M::m3}},       {{M::m1, M::m12}, {M::m12}},
      {{M::m1, M::m13}, {M::m13}},     {{M::m2, M::m12}, {M::m12}},
      {{M::m2, M::m23}, {M::m23}},     {{M::m3, M::m13}, {M::m13}},
      {{M::m3, M::m23}, {M::m23}},     {{M::m12, M::m23}, {M::m13}},
      {{M::m13, M::m23}, {M::m12}},    {{M::m12, M::m13}, {M::m23}},
      {{M::m12, M::m12}, {M::m1, M::m2}}, {{M::m13, M::m13}, {M::m1, M::m3}},
      {{M::m23, M::m23}, {M::m2, M::m3}},
  };
  for (int n = 3; n <= 8; ++n) {
    for (int k1 = 1; k1 <= n; ++k1) {
      for (int k2 = 1; k2 <= k1; ++k2) {
        int k3 = n - k1 - k2;
        if (k3 < 1 || k3 > k2) continue;
        Decomposition d(k1, k2, k3);
        auto B = so_basis(n);
        for (const auto& x : B) {
          for (const auto& y : B) {
            auto r = bracket(x, y);
            if (!r) continue;
            M a = d.module_of(x), b = d.module_of(y);
            if (b < a) std::swap(a, b);
            auto it = rel.find({a, b});
            REQUIRE(it != rel.end());
            CHECK(it->second.count(d.module_of(r->element)) == 1);
          }
        }
      }
    }
  }
}
