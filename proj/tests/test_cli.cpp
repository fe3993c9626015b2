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

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "einso/cli/config.hpp"
#include "einso/cli/serialize.hpp"
#include "einso/cli/verify.hpp"
#include "einso/exact/errors.hpp"

using namespace einso;
using namespace einso::cli;
using liealg::Decomposition;

TEST_CASE("triplets json carries the [1;11] entry of (3,3,1)") {
  auto j = triplets_to_json(liealg::triplets_closed_form(Decomposition(3, 3, 1)));
  CHECK(j["k"] == json::array({3, 3, 1}));
  json want = {{"triple", {"m1", "m1", "m1"}}, {"value", "3/5"}};
  bool found = false;
  for (const auto& e : j["entries"]) found = found || e == want;
  CHECK(found);
}

TEST_CASE("ricci json evaluates the bi-invariant metric") {
  auto sys = ricci::ricci_closed_form(Decomposition(4, 3, 1));
  std::map<std::string, Rational> ones;
  for (const auto& v : sys.ring->names()) ones[v] = 1;
  auto j = ricci_to_json(sys, &ones);
  for (const auto& [m, c] : j["components"].items()) CHECK(c["value"] == "1/4");
}

TEST_CASE("config settings") {
  Config c;
  apply_setting(c, "groebner_reductions", "5000");
  apply_setting(c, "groebner_memory_mb", "64");
  apply_setting(c, "groebner_work", "1000000");
  apply_setting(c, "refinement_tolerance", "1e-6");
  apply_setting(c, "output_format", "text");
  apply_setting(c, "cache", "off");
  CHECK(c.groebner_reductions == 5000);
  CHECK(c.groebner_bytes == std::size_t{64} << 20);
  CHECK(c.groebner_work == 1000000);
  CHECK(c.refinement_tolerance > 0);
  CHECK(c.refinement_tolerance < Rational(1, 100000));
  CHECK(c.output_format == OutputFormat::Text);
  CHECK_FALSE(c.use_cache);
  CHECK_THROWS_AS(apply_setting(c, "groebner_reductions", "-3"), StructuralError);
  CHECK_THROWS_AS(apply_setting(c, "colour", "blue"), StructuralError);
  CHECK_THROWS_AS(apply_setting(c, "refinement_tolerance", "tiny"), StructuralError);
}

TEST_CASE("config file and cache override") {
  auto path = std::filesystem::temp_directory_path() / "einso_test.conf";
  {
    std::ofstream f(path);
    f << "# comment\n\nnumeric_starts = 17\ncache_dir = somewhere\n";
  }
  ::setenv("EINSTEIN_SO_CACHE", "/tmp/einso-env-cache", 1);
  auto c = load_config(path);
  ::unsetenv("EINSTEIN_SO_CACHE");
  CHECK(c.numeric_starts == 17);
  CHECK(c.cache_dir == "/tmp/einso-env-cache");
  CHECK(load_config(path).cache_dir == "somewhere");
  std::filesystem::remove(path);
}

TEST_CASE("classify a rational metric") {
  Decomposition d(3, 1, 1);
  // The SO(4)-invariant solution of the (3,1,1) system at x23 = 1.
  auto rec = einstein::rational_record(d, {{"x1", Rational(1, 2)}, {"x12", Rational(1, 2)}, {"x13", 1}, {"x23", 1}});
  CHECK(rec.classification.kind == einstein::Kind::NaturallyReductive);
  CHECK(rec.classification.case_id == 1);
  CHECK(rec.einstein_constant.is_point());
  auto j = record_to_json(rec);
  CHECK(j["class"]["kind"] == "nr");
  CHECK(j["status"] == "exact");
  CHECK(interval_from_json(j["scaled"]["x1"]).lo == Rational(3, 16));

  CHECK_THROWS_AS(einstein::rational_record(d, {{"x1", 1}, {"x12", 2}, {"x13", 1}, {"x23", 1}}), DomainError);
  CHECK_THROWS_AS(einstein::rational_record(d, {{"x1", 0}, {"x12", 1}, {"x13", 1}, {"x23", 1}}), DomainError);
  CHECK_THROWS_AS(einstein::rational_record(d, {{"x1", 1}}), StructuralError);
}

TEST_CASE("verification report round trip") {
  VerificationReport r;
  r.checks.push_back({1, "triplets", "closed forms", "derived", "ok", CheckStatus::Pass, 0.5});
  r.checks.push_back(
      {4, "eliminant", "printed product", "published eliminant", "budget", CheckStatus::SkippedBudget, 2.0});
  CHECK(r.passed());
  auto back = VerificationReport::from_json(r.to_json());
  REQUIRE(back.checks.size() == 2);
  CHECK(back.checks[1].status == CheckStatus::SkippedBudget);
  CHECK(back.checks[0].name == "triplets");
  CHECK(back.to_json() == r.to_json());
  r.checks[0].status = CheckStatus::Fail;
  CHECK_FALSE(r.passed());
}

TEST_CASE("tiny budget skips the exact eliminant check") {
  Config c;
  c.groebner_reductions = 10;
  c.use_cache = false;
  VerifyOptions opt;
  opt.only = {4};
  auto report = verify_paper(c, opt);
  REQUIRE(report.checks.size() == 1);
  CHECK(report.checks[0].status == CheckStatus::SkippedBudget);
}
