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

#include <algorithm>
#include <random>

#include "einso/einstein/analysis.hpp"
#include "einso/einstein/table.hpp"
#include "einso/exact/errors.hpp"

using namespace einso;
using namespace einso::einstein;
using liealg::Decomposition;

namespace {

UPoly from_desc(const std::vector<const char*>& desc) {
  UPoly p;
  for (auto it = desc.rbegin(); it != desc.rend(); ++it) p.push_back(parse_rational(*it));
  return p;
}

bool proportional(const UPoly& a, const UPoly& b) {
  return realroots::primitive(realroots::trimmed(a)) == realroots::primitive(realroots::trimmed(b));
}

std::vector<double> scaled_tuple(const SolutionRecord& r) {
  std::vector<double> t;
  for (const auto& v : r.variables) t.push_back(r.approx_scaled(v));
  return t;
}

const SolutionRecord* find_scaled(const std::vector<SolutionRecord>& recs,
                                  const std::map<std::string, double>& want, double tol) {
  for (const auto& r : recs) {
    bool ok = true;
    for (const auto& [v, x] : want) ok = ok && std::abs(r.approx_scaled(v) - x) < tol;
    if (ok) return &r;
  }
  return nullptr;
}

// Shared (3,3,1) exact run; the Groebner step dominates the test time.
const PipelineResult& run331() {
  static const PipelineResult res = run_pipeline(build_system(Decomposition(3, 3, 1)));
  return res;
}

}  // namespace

TEST_CASE("ansatz selection") {
  CHECK(ansatz_of(Decomposition(3, 2, 2)) == Ansatz::ThreeBlocks);
  CHECK(ansatz_of(Decomposition(3, 3, 1)) == Ansatz::TwoBlocks);
  CHECK(ansatz_of(Decomposition(5, 1, 1)) == Ansatz::OneBlock);
  CHECK_THROWS(ansatz_of(Decomposition(1, 1, 1)));
}

TEST_CASE("(3,3,1) system is the printed one") {
  auto sys = build_system(Decomposition(3, 3, 1));
  REQUIRE(sys.polynomials.size() == 4);
  const char* printed[] = {
      "x1^2*x12^2*x2 + 3*x1^2*x13^2*x2 - x1*x12^2*x13^2*x2^2 - x1*x12^2*x13^2 - 3*x1*x13^2*x2^2 + x12^2*x13^2*x2",
      "2*x1*x13*x2 - x12^3*x2 + x12^2*x13*x2^2 + x12^2*x13 + x12*x13^2*x2 - 10*x12*x13*x2 + x12*x2 + 5*x13*x2^2",
      "-x1*x13 + 2*x12^3 + x12^2*x13*x2 - 5*x12^2*x13 + x12*x13^2 + 5*x12*x13 - 2*x12 - x13*x2",
      "x1*x12 - x12*x13^2*x2 + 5*x12*x13^2 - 5*x12*x13 - 3*x13^3 + 3*x13",
  };
  for (int i = 0; i < 4; ++i)
    CHECK_MESSAGE(equal_up_to_scalar(sys.polynomials[i], parse_poly(printed[i], sys.ring)), "g" << i + 1);
}

TEST_CASE("(4,3,1) system matches the printed g1 and g4") {
  auto sys = build_system(Decomposition(4, 3, 1));
  REQUIRE(sys.polynomials.size() == 4);
  CHECK(equal_up_to_scalar(
      sys.polynomials[0],
      parse_poly("x1^2*x12^2*x2 + 3*x1^2*x13^2*x2 - x1*x12^2*x13^2*x2^2 - x1*x12^2*x13^2 - 4*x1*x13^2*x2^2 + 2*x12^2*x13^2*x2",
                 sys.ring)));
  CHECK(equal_up_to_scalar(
      sys.polynomials[3],
      parse_poly("3*x1*x12 - x12^2*x13 - 2*x12*x13^2*x2 + 12*x12*x13^2 - 12*x12*x13 - 7*x13^3 + 7*x13", sys.ring)));
}

TEST_CASE("the all-ones metric solves every system") {
  for (int n = 5; n <= 12; ++n)
    for (const auto& d : partitions(n)) {
      auto sys = build_system(d);
      std::map<std::string, Rational> ones;
      for (const auto& v : sys.ring->names()) ones[v] = 1;
      for (const auto& p : sys.polynomials) CHECK(p.evaluate(ones) == 0);
    }
}

TEST_CASE("specializations") {
  auto sys = build_system(Decomposition(6, 3, 3), {{"x12", "1"}, {"x13", "1"}, {"x3", "x2"}});
  CHECK(sys.ring->names() == std::vector<std::string>{"x1", "x2", "x23"});
  CHECK(sys.precedence.back() == "x23");
  CHECK(sys.metric.at("x3") == MultiPoly::variable(sys.ring, "x2"));
  CHECK_THROWS_AS(build_system(Decomposition(3, 3, 1), {{"x1", "x2"}, {"x2", "x1"}}), StructuralError);
  CHECK(parse_binding("x3 = x2") == std::pair<std::string, std::string>{"x3", "x2"});
}

TEST_CASE("(n-2,1,1): exactly the three naturally reductive families") {
  for (int n = 5; n <= 12; ++n) {
    auto res = run_pipeline(build_system(Decomposition(n - 2, 1, 1)));
    CHECK(res.status == Status::Exact);
    CHECK(res.classes.size() == 3);
    for (const auto& c : res.classes) CHECK(c.classification.kind == Kind::NaturallyReductive);

    Rational N(n);
    Rational D = N * N * N - 2 * N * N + N - 4;
    Rational a = (N - 3) / (N - 1);
    Rational b = (N - 4) * (N - 1) * (N - 1) / D;
    Rational c = (N - 1) * (N * N - 3 * N + 4) / D;
    // (x1, x12, x13, x23); the second family also appears with x12, x13 swapped.
    std::vector<std::array<Rational, 4>> expected = {
        {1, 1, 1, 1}, {a, 1, a, 1}, {a, a, 1, 1}, {b, c, c, 1}};
    CHECK(res.solutions.size() == expected.size());
    for (const auto& e : expected) {
      bool found = false;
      for (const auto& s : res.solutions) {
        const auto* w = dynamic_cast<const AlgebraicWitness*>(s.witness.get());
        REQUIRE(w);
        bool same = true;
        const char* names[] = {"x1", "x12", "x13", "x23"};
        for (int i = 0; i < 4; ++i) {
          auto q = w->rational_coordinate(*s.index_of(names[i]));
          same = same && q && *q == e[static_cast<std::size_t>(i)];
        }
        found = found || same;
      }
      CHECK_MESSAGE(found, "n = " << n << " x1 = " << to_string(e[0]));
    }
    if (n == 7) CHECK(b == Rational(27, 62));
  }
}

TEST_CASE("(3,3,1): eliminant and metrics") {
  const auto& res = run331();
  REQUIRE(res.exact);
  UPoly h1 = from_desc({"9078544800000", "-87978150000000", "416122213455000", "-1222223075437500",
                        "2532878590309970", "-4171390831990050", "5900094406718764", "-7070644584919459",
                        "6230617318198202", "-4091340309226802", "1722695469975774", "983550542994755",
                        "-2624020500593532", "983550542994755", "1722695469975774", "-4091340309226802",
                        "6230617318198202", "-7070644584919459", "5900094406718764", "-4171390831990050",
                        "2532878590309970", "-1222223075437500", "416122213455000", "-87978150000000",
                        "9078544800000"});
  UPoly product = realroots::mul(
      realroots::mul(realroots::mul(from_desc({"1", "-1"}), from_desc({"6", "-44", "90", "-45"})),
                     from_desc({"45", "-90", "44", "-6"})),
      h1);
  CHECK(res.exact->eliminant_variable == "x13");
  CHECK(proportional(res.exact->eliminant, product));

  int nr = 0, non_nr = 0;
  for (const auto& c : res.classes) {
    if (c.classification.kind == Kind::NaturallyReductive) ++nr;
    if (c.classification.kind == Kind::NonNaturallyReductive) ++non_nr;
  }
  CHECK(non_nr == 1);
  CHECK(nr == 5);
  const auto* m = find_scaled(res.solutions,
                              {{"x1", 0.0564701}, {"x2", 0.0528085}, {"x12", 0.438178}, {"x23", 0.470542}, {"x13", 0.20018}},
                              1e-4);
  CHECK(m);
  if (m) CHECK(m->classification.kind == Kind::NonNaturallyReductive);
  // Its mirror image is a separate solution in the same class.
  const auto* mirror = find_scaled(res.solutions,
                                   {{"x1", 0.0528085}, {"x2", 0.0564701}, {"x12", 0.438178}, {"x23", 0.20018}, {"x13", 0.470542}},
                                   1e-4);
  REQUIRE(mirror);
  if (m) CHECK(mirror->isometry_class == m->isometry_class);

  for (const auto& s : res.solutions) {
    CHECK(s.einstein_constant.lo > 0);
    for (const auto& iv : s.scaled) CHECK(iv.lo > 0);
  }
}

TEST_CASE("(3,3,1): numeric solutions lie among the exact ones") {
  const auto& exact = run331();
  NumericOptions opt;
  opt.starts = 400;
  auto numeric = solve_numeric(build_system(Decomposition(3, 3, 1)), opt);
  CHECK(!numeric.empty());
  for (const auto& r : numeric) {
    CHECK(r.certified);
    bool matched = false;
    for (const auto& e : exact.solutions) {
      bool all = true;
      for (std::size_t i = 0; i < r.coords.size(); ++i) all = all && r.coords[i].overlaps(e.coords[i]);
      matched = matched || all;
    }
    CHECK(matched);
  }
}

TEST_CASE("classification is invariant under scaling") {
  const auto& res = run331();
  auto d = Decomposition(3, 3, 1);
  std::mt19937_64 rng(7);
  for (const auto& s : res.solutions) {
    const auto* w = dynamic_cast<const AlgebraicWitness*>(s.witness.get());
    REQUIRE(w);
    Rational c(static_cast<long>(rng() % 97 + 1), static_cast<long>(rng() % 89 + 1));
    std::vector<UPoly> coords;
    for (const auto& p : w->coordinates()) coords.push_back(realroots::scale(p, c));
    SolutionRecord t = s;
    t.witness = std::make_shared<AlgebraicWitness>(w->ring(), w->minpoly(), w->root(), coords);
    for (auto& iv : t.coords) iv = iv * c;
    auto a = classify(s, d);
    auto b = classify(t, d);
    CHECK(a.kind == b.kind);
    CHECK(a.case_id == b.case_id);
  }
}

TEST_CASE("isometry classes do not depend on input order") {
  const auto& res = run331();
  auto d = Decomposition(3, 3, 1);
  std::vector<std::vector<double>> reference;
  for (const auto& c : res.classes) reference.push_back(scaled_tuple(c));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    auto recs = res.solutions;
    std::shuffle(recs.begin(), recs.end(), rng);
    auto classes = dedup_isometry(recs, d);
    std::vector<std::vector<double>> got;
    for (const auto& c : classes) got.push_back(scaled_tuple(c));
    CHECK(got == reference);
  }
}

TEST_CASE("an inconsistent specialization has no solutions") {
  auto sys = build_system(Decomposition(4, 1, 1), {{"x12", "1"}, {"x13", "2"}});
  CHECK(solve_exact(sys).solutions.empty());
  NumericOptions opt;
  opt.starts = 200;
  CHECK(solve_numeric(sys, opt).empty());
}

TEST_CASE("small cells of the table") {
  auto check = [](int k1, int k2, int k3, int non_nr, int nr) {
    auto cell = count_cell(Decomposition(k1, k2, k3));
    CHECK(cell.status == CellStatus::Exact);
    CHECK_MESSAGE(cell.non_nr == non_nr, k1 << k2 << k3);
    CHECK_MESSAGE(cell.nr == nr, k1 << k2 << k3);
    CHECK(cell.undecided == 0);
  };
  check(3, 1, 1, 0, 3);
  check(2, 2, 1, 0, 3);
  check(3, 2, 1, 0, 5);
  check(4, 2, 1, 0, 6);
}

TEST_CASE("partitions") {
  CHECK(partitions(5).size() == 2);
  CHECK(partitions(9).size() == 7);
  CHECK(partitions(9).front() == Decomposition(7, 1, 1));
  CHECK(partitions(9).back() == Decomposition(3, 3, 3));
}
