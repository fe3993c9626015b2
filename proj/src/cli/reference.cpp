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

#include "reference.hpp"

namespace einso::cli::reference {

namespace {

UPoly from_desc(std::initializer_list<const char*> desc) {
  UPoly p;
  for (auto it = std::rbegin(desc); it != std::rend(desc); ++it) p.push_back(parse_rational(*it));
  return p;
}

UPoly product(std::initializer_list<UPoly> factors) {
  UPoly out{Rational(1)};
  for (const auto& f : factors) out = realroots::mul(out, f);
  return out;
}

}  // namespace

UPoly eliminant_331() {
  UPoly h1 = from_desc({"9078544800000", "-87978150000000", "416122213455000", "-1222223075437500",
                        "2532878590309970", "-4171390831990050", "5900094406718764", "-7070644584919459",
                        "6230617318198202", "-4091340309226802", "1722695469975774", "983550542994755",
                        "-2624020500593532", "983550542994755", "1722695469975774", "-4091340309226802",
                        "6230617318198202", "-7070644584919459", "5900094406718764", "-4171390831990050",
                        "2532878590309970", "-1222223075437500", "416122213455000", "-87978150000000",
                        "9078544800000"});
  return product({from_desc({"1", "-1"}), from_desc({"6", "-44", "90", "-45"}),
                  from_desc({"45", "-90", "44", "-6"}), h1});
}

UPoly eliminant_431() {
  UPoly h2 = from_desc({"5426775507148489670400", "-85161185092622977873920", "643415930216926223949312",
                        "-3054548385819855899001216", "10179140499777121100664800",
                        "-25585147362416655835236384", "51380426324079059150364272",
                        "-85934185504663087173249048", "120352447918421302289568863",
                        "-136938372384910964649260802", "121268417379459335461167457",
                        "-78483773118912467818333590", "32048679980888195807658286",
                        "-21037081214018592447662850", "96567724403906545251348604",
                        "-279673822213789859470643520", "527833035046902978479331387",
                        "-769632045866390647274523642", "937521733316934021780397473",
                        "-973318915329328329165562374", "864907599634224063462448416",
                        "-664413545084655303518836950", "442175543674339070418041970",
                        "-249282932584983174857359764", "114233981412525395978707920",
                        "-40474281023127469650239100", "10382320721058779134026000",
                        "-1735984447231701886065000", "146138820428187141975000"});
  return product({from_desc({"1", "-5"}), from_desc({"1", "-1"}), from_desc({"7", "-24", "14"}),
                  from_desc({"287", "-625", "369", "-63"}), h2});
}

UPoly slice_eliminant(int n) {
  Rational N(n);
  auto sq = [](const Rational& a) { return a * a; };
  UPoly h(9);
  h[8] = sq(N - 6) * (N - 3) * (N * N - 7 * N + 24);
  h[7] = -2 * sq(N - 6) * (N - 2) * (N * N - N + 6);
  h[6] = (N - 6) * (N * N * N * N + 26 * N * N * N - 269 * N * N + 686 * N - 516);
  h[5] = -44 * (N - 6) * (N - 3) * (N - 2) * (N + 2);
  h[4] = 14 * N * N * N * N + 273 * N * N * N - 3034 * N * N + 5687 * N + 1164;
  h[3] = -2 * (N - 2) * (157 * N * N - 157 * N - 2778);
  h[2] = 49 * N * N * N + 1658 * N * N - 6539 * N + 836;
  h[1] = -728 * (N - 2) * (N + 5);
  h[0] = 2704 * (N - 1);
  return realroots::trimmed(h);
}

const std::vector<ScaledMetric>& non_nr_331() {
  static const std::vector<ScaledMetric> v = {{0.0564701, 0.0528085, 0.438178, 0.470542, 0.20018}};
  return v;
}

const std::vector<ScaledMetric>& non_nr_431() {
  static const std::vector<ScaledMetric> v = {
      {0.097516624, 0.043773055, 0.42753231, 0.47140698, 0.22713855},
      {0.090168527, 0.046935893, 0.44028850, 0.16491085, 0.46120545}};
  return v;
}

const std::vector<TableRow>& table() {
  static const std::vector<TableRow> v = {
      {{3, 1, 1}, 0, 3}, {{2, 2, 1}, 0, 3},
      {{4, 1, 1}, 0, 3}, {{3, 2, 1}, 0, 5}, {{2, 2, 2}, 0, 2},
      {{5, 1, 1}, 0, 3}, {{4, 2, 1}, 0, 6}, {{3, 3, 1}, 1, 5}, {{3, 2, 2}, 0, 5},
      {{6, 1, 1}, 0, 3}, {{5, 2, 1}, 0, 6}, {{4, 3, 1}, 2, 7}, {{4, 2, 2}, 0, 5}, {{3, 3, 2}, 1, 5},
      {{7, 1, 1}, 0, 3}, {{6, 2, 1}, 0, 6}, {{5, 3, 1}, 2, 8}, {{5, 2, 2}, 0, 5},
      {{4, 3, 2}, 2, 8}, {{4, 4, 1}, 2, 5}, {{3, 3, 3}, 2, 5}};
  return v;
}

}  // namespace einso::cli::reference
