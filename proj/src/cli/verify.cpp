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

#include "einso/cli/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "einso/einstein/table.hpp"
#include "einso/exact/errors.hpp"
#include "einso/groebner/groebner.hpp"
#include "einso/liealg/liealg.hpp"
#include "einso/realroots/sturm.hpp"
#include "einso/ricci/ricci.hpp"
#include "reference.hpp"

namespace einso::cli {

namespace {

using namespace einstein;
using liealg::Decomposition;
using realroots::UPoly;
using einso::to_string;
using einstein::to_string;

// Tolerances and time limits of the suite.
constexpr double kTol331 = 1e-4;
constexpr double kTol431 = 1e-5;
constexpr double kLimitTriplets = 10;
constexpr double kLimitRicci = 30;
constexpr double kLimitEliminant331 = 600;
constexpr double kLimitRow = 900;
constexpr double kLimitTable = 7200;
constexpr double kLimitProperties = 300;
constexpr int kOffdiagSamples = 50;
constexpr int kSturmSamples = 500;

struct Failure {
  std::ostringstream text;
  bool any = false;
  template <class T>
  Failure& operator<<(const T& v) {
    if (any) text << "; ";
    any = true;
    text << v;
    return *this;
  }
};

std::string label(const Decomposition& d) {
  return "(" + std::to_string(d.k(1)) + "," + std::to_string(d.k(2)) + "," + std::to_string(d.k(3)) + ")";
}

std::vector<Decomposition> all_partitions(int n_min, int n_max) {
  std::vector<Decomposition> out;
  for (int n = n_min; n <= n_max; ++n)
    for (const auto& d : partitions(n)) out.push_back(d);
  return out;
}

bool proportional(const UPoly& a, const UPoly& b) {
  if (realroots::is_zero(a) || realroots::is_zero(b)) return false;
  auto [q, r] = realroots::divmod(a, b);
  return realroots::is_zero(r) && realroots::degree(q) == 0;
}

struct Counts {
  int non_nr = 0, nr = 0, undecided = 0;
};

Counts count(const PipelineResult& res) {
  Counts c;
  for (const auto& r : res.classes) {
    switch (r.classification.kind) {
      case Kind::NaturallyReductive: ++c.nr; break;
      case Kind::NonNaturallyReductive: ++c.non_nr; break;
      case Kind::Undecided: ++c.undecided; break;
    }
  }
  return c;
}

std::string describe(const Counts& c) {
  return "non-NR " + std::to_string(c.non_nr) + ", NR " + std::to_string(c.nr) +
         (c.undecided ? ", undecided " + std::to_string(c.undecided) : "");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// Matches printed scaled metrics against non-NR solutions; returns the
/// isometry classes hit, or a failure message.
std::vector<int> match_metrics(const PipelineResult& res, const std::vector<reference::ScaledMetric>& want,
                               double tol, Failure& fail) {
  std::vector<int> hit;
  for (const auto& m : want) {
    const SolutionRecord* found = nullptr;
    for (const auto& s : res.solutions) {
      if (std::abs(s.approx_scaled("x1") - m.x1) < tol && std::abs(s.approx_scaled("x2") - m.x2) < tol &&
          std::abs(s.approx_scaled("x12") - m.x12) < tol && std::abs(s.approx_scaled("x23") - m.x23) < tol &&
          std::abs(s.approx_scaled("x13") - m.x13) < tol) {
        found = &s;
        break;
      }
    }
    std::ostringstream what;
    what << "(" << m.x1 << ", " << m.x2 << ", " << m.x12 << ", " << m.x23 << ", " << m.x13 << ")";
    if (!found) {
      fail << "no solution near " + what.str();
    } else if (found->classification.kind != Kind::NonNaturallyReductive) {
      fail << what.str() + " is not classified non-NR";
    } else {
      hit.push_back(found->isometry_class);
    }
  }
  std::sort(hit.begin(), hit.end());
  if (std::adjacent_find(hit.begin(), hit.end()) != hit.end()) fail << "printed metrics fall in one class";
  return hit;
}

class Suite {
 public:
  Suite(const Config& config, const VerifyOptions& options)
      : config_(config), options_(options), opt_(pipeline_options(config)) {}

  Check run(int id) {
    Check c;
    c.id = id;
    auto t0 = std::chrono::steady_clock::now();
    try {
      switch (id) {
        case 1: triplets(c); break;
        case 2: ricci_forms(c); break;
        case 3: bi_invariant(c); break;
        case 4: eliminant_331(c); break;
        case 5: metrics_331(c); break;
        case 6: metrics_431(c); break;
        case 7: slice(c); break;
        case 8: one_block(c); break;
        case 9: table(c); break;
        case 10: properties(c); break;
        default: throw StructuralError("no criterion " + std::to_string(id));
      }
    } catch (const BudgetExceeded& e) {
      c.status = CheckStatus::SkippedBudget;
      c.actual = e.what();
    } catch (const std::exception& e) {
      c.status = CheckStatus::Fail;
      c.actual = std::string("error: ") + e.what();
    }
    c.seconds = seconds_since(t0);
    return c;
  }

 private:
  static void finish(Check& c, const Failure& fail, const std::string& ok_text) {
    c.status = fail.any ? CheckStatus::Fail : CheckStatus::Pass;
    c.actual = fail.any ? fail.text.str() : ok_text;
  }

  static void time_limit(Failure& fail, std::chrono::steady_clock::time_point t0, double limit) {
    double s = seconds_since(t0);
    if (s > limit) {
      std::ostringstream m;
      m << "took " << s << " s, limit " << limit << " s";
      fail << m.str();
    }
  }

  /// Exact-only pipeline run; BudgetExceeded propagates.
  const PipelineResult& exact_run(const std::string& key, const EinsteinSystem& sys,
                                  std::vector<std::string> nonzero = {}) {
    if (auto it = runs_.find(key); it != runs_.end()) return it->second;
    auto opt = opt_;
    opt.fallback = false;
    opt.exact.nonzero = std::move(nonzero);
    return runs_.emplace(key, run_pipeline(sys, opt)).first->second;
  }

  /// Pipeline with the numeric fallback.
  const PipelineResult& any_run(const std::string& key, const EinsteinSystem& sys) {
    if (auto it = runs_.find(key); it != runs_.end()) return it->second;
    return runs_.emplace(key, run_pipeline(sys, opt_)).first->second;
  }

  void triplets(Check& c) {
    c.name = "triplet oracle equivalence";
    c.expected = "brute-force triplets equal the closed forms for every (k1,k2,k3), 5 <= n <= 12, in < 10 s";
    c.source = "published closed forms";
    auto t0 = std::chrono::steady_clock::now();
    Failure fail;
    auto ds = all_partitions(5, 12);
    for (const auto& d : ds)
      if (!(liealg::triplets_bruteforce(d) == liealg::triplets_closed_form(d))) fail << label(d);
    time_limit(fail, t0, kLimitTriplets);
    finish(c, fail, std::to_string(ds.size()) + " decompositions agree");
  }

  void ricci_forms(Check& c) {
    c.name = "Ricci closed-form oracle";
    c.expected = "generic and closed-form Ricci components agree as rational functions, 5 <= n <= 12, in < 30 s";
    c.source = "published closed forms; generic formula as oracle";
    auto t0 = std::chrono::steady_clock::now();
    Failure fail;
    auto ds = all_partitions(5, 12);
    for (const auto& d : ds) {
      auto g = ricci::ricci_generic(d, liealg::triplets_bruteforce(d));
      auto f = ricci::ricci_closed_form(d);
      if (g.components.size() != f.components.size()) {
        fail << label(d) + " component sets differ";
        continue;
      }
      for (const auto& [m, r] : g.components)
        if (!(r == f.components.at(m))) fail << label(d) + " " + liealg::variable_name(m);
    }
    time_limit(fail, t0, kLimitRicci);
    finish(c, fail, std::to_string(ds.size()) + " decompositions agree");
  }

  void bi_invariant(Check& c) {
    c.name = "bi-invariant metric";
    c.expected = "all-ones metric gives every Ricci component exactly 1/4";
    c.source = "analytic";
    Failure fail;
    auto ds = all_partitions(5, 12);
    for (const auto& d : ds) {
      for (const auto& sys : {ricci::ricci_closed_form(d), ricci::ricci_generic(d, liealg::triplets_bruteforce(d))}) {
        std::map<std::string, Rational> ones;
        for (const auto& v : ricci::metric_variables(d)) ones[v] = 1;
        for (const auto& [m, v] : sys.evaluate(ones))
          if (v != Rational(1, 4)) fail << label(d) + " " + liealg::variable_name(m) + " = " + to_string(v);
      }
    }
    finish(c, fail, "all components 1/4 for " + std::to_string(ds.size()) + " decompositions");
  }

  void eliminant_331(Check& c) {
    c.name = "SO(7) eliminant";
    c.expected = "univariate generator in x13 of the saturated (3,3,1) ideal equals the printed product "
                 "(x13-1)(6x13^3-44x13^2+90x13-45)(45x13^3-90x13^2+44x13-6)h1(x13) up to scalar, in < 10 min";
    c.source = "published eliminant";
    auto t0 = std::chrono::steady_clock::now();
    const auto& res = any_run("331", build_system(Decomposition(3, 3, 1)));
    if (!res.exact) throw BudgetExceeded("exact elimination for (3,3,1) exceeded the budget");
    Failure fail;
    const auto& e = res.exact->eliminant;
    if (res.exact->eliminant_variable != "x13") fail << "eliminant in " + res.exact->eliminant_variable;
    if (!proportional(e, reference::eliminant_331()))
      fail << "eliminant of degree " + std::to_string(realroots::degree(e)) + " is not a multiple of the product";
    time_limit(fail, t0, kLimitEliminant331);
    finish(c, fail, "degree " + std::to_string(realroots::degree(e)) + " eliminant divides exactly, quotient constant");
  }

  void metrics_331(Check& c) {
    c.name = "SO(7) non-NR metric";
    c.expected = "(3,3,1): one non-NR class at (0.0564701, 0.0528085, 0.438178, 0.470542, 0.20018) within 1e-4 "
                 "as (x1, x2, x12, x23, x13), and 5 NR classes";
    c.source = "published solution and table";
    auto t0 = std::chrono::steady_clock::now();
    const auto& res = any_run("331", build_system(Decomposition(3, 3, 1)));
    Failure fail;
    auto counts = count(res);
    match_metrics(res, reference::non_nr_331(), kTol331, fail);
    if (counts.non_nr != 1 || counts.nr != 5 || counts.undecided) fail << describe(counts);
    if (!res.certified) fail << "uncertified numeric solutions";
    time_limit(fail, t0, kLimitRow);
    finish(c, fail, describe(counts) + ", status " + to_string(res.status));
  }

  void metrics_431(Check& c) {
    c.name = "SO(8) non-NR metrics";
    c.expected = "(4,3,1): two non-isometric non-NR classes at the printed scaled metrics within 1e-5, "
                 "7 NR classes, eliminant in x13 equal to the printed degree-41 product with h2 up to scalar";
    c.source = "published solutions, eliminant and table";
    auto t0 = std::chrono::steady_clock::now();
    const auto& res = any_run("431", build_system(Decomposition(4, 3, 1)));
    Failure fail;
    auto counts = count(res);
    match_metrics(res, reference::non_nr_431(), kTol431, fail);
    if (counts.non_nr != 2 || counts.nr != 7 || counts.undecided) fail << describe(counts);
    if (!res.certified) fail << "uncertified numeric solutions";
    bool have_eliminant = res.exact.has_value();
    if (have_eliminant && !proportional(res.exact->eliminant, reference::eliminant_431()))
      fail << "eliminant is not a multiple of the printed product";
    time_limit(fail, t0, kLimitRow);
    finish(c, fail, describe(counts) + ", status " + to_string(res.status) +
                        (have_eliminant ? ", eliminant matches" : ""));
    if (!fail.any && !have_eliminant) {
      c.status = CheckStatus::SkippedBudget;
      c.actual += "; eliminant not computed within the budget";
    }
  }

  void slice(Check& c) {
    c.name = "(n-6,3,3) slice sign analysis";
    c.expected = "for 9 <= n <= 12 with x12 = x13 = 1, x2 = x3, x2 != x23: eliminant equals h(x23) up to scalar; "
                 "h(0) > 0, h(1) = -2(n-9)(n-1)n^2, h(2) > 0; two positive roots 0 < a < 1 < b < 2 (n = 9: 1 and "
                 "b in (6/5, 2)); solutions positive and non-NR where x23 != 1";
    c.source = "published eliminant and sign analysis";
    Failure fail;
    std::ostringstream ok;
    for (int n = 9; n <= 12; ++n) {
      auto tag = "n=" + std::to_string(n) + ": ";
      Specialization spec{{"x12", "1"}, {"x13", "1"}, {"x3", "x2"}};
      const auto& res = exact_run("slice" + std::to_string(n), build_system(Decomposition(n - 6, 3, 3), spec),
                                  {"x2 - x23"});
      UPoly h = reference::slice_eliminant(n);
      if (res.exact->eliminant_variable != "x23") fail << tag + "eliminant in " + res.exact->eliminant_variable;
      if (!proportional(res.exact->eliminant, h)) fail << tag + "eliminant differs from h";
      Rational N(n);
      if (realroots::evaluate(h, 0) != 2704 * (N - 1) || realroots::evaluate(h, 0) <= 0) fail << tag + "h(0)";
      if (realroots::evaluate(h, 1) != -2 * (N - 9) * (N - 1) * N * N) fail << tag + "h(1)";
      if (n > 9 && realroots::evaluate(h, 1) >= 0) fail << tag + "h(1) >= 0";
      if (realroots::evaluate(h, 2) <= 0) fail << tag + "h(2) <= 0";
      auto roots = realroots::isolate_positive_roots(h);
      if (roots.size() != 2) fail << tag + std::to_string(roots.size()) + " positive roots";
      if (n > 9) {
        if (realroots::count_roots(h, 0, 1) != 1 || realroots::count_roots(h, 1, 2) != 1) fail << tag + "root bounds";
      } else {
        if (realroots::evaluate(h, Rational(6, 5)) != Rational(-1751152, 390625)) fail << tag + "h(6/5)";
        if (realroots::count_roots(h, 0, 1) != 1 || realroots::count_roots(h, Rational(6, 5), 2) != 1 ||
            realroots::evaluate(h, 2) == 0)
          fail << tag + "root bounds";
      }
      int expected_off_one = n > 9 ? 2 : 1;
      int off_one = 0;
      for (const auto& s : res.solutions) {
        const auto* w = dynamic_cast<const AlgebraicWitness*>(s.witness.get());
        auto x23 = w ? w->rational_coordinate(*s.index_of("x23")) : std::nullopt;
        for (const auto& iv : s.coords)
          if (iv.lo <= 0) fail << tag + "non-positive coordinate";
        if (x23 && *x23 == 1) continue;
        ++off_one;
        if (s.classification.kind != Kind::NonNaturallyReductive) fail << tag + "solution not non-NR";
      }
      if (off_one != expected_off_one)
        fail << tag + std::to_string(off_one) + " solutions with x23 != 1";
      ok << (n > 9 ? " " : "") << tag << off_one << " non-NR";
    }
    finish(c, fail, ok.str());
  }

  void one_block(Check& c) {
    c.name = "(n-2,1,1) closed forms";
    c.expected = "for 5 <= n <= 12 exactly the families (1,1,1,1), ((n-3)/(n-1),1,(n-3)/(n-1),1), "
                 "((n-4)(n-1)^2/D, (n-1)(n^2-3n+4)/D, same, 1) with D = n^3-2n^2+n-4, as exact rationals in "
                 "(x1, x12, x13, x23), all NR; off-diagonal Ricci exactly 0 on 50 random metrics per n";
    c.source = "published families and off-diagonal lemma";
    Failure fail;
    std::mt19937_64 rng(20260101);
    std::uniform_int_distribution<int> num(1, 40), den(1, 12);
    for (int n = 5; n <= 12; ++n) {
      auto tag = "n=" + std::to_string(n) + ": ";
      for (int t = 0; t < kOffdiagSamples; ++t) {
        std::map<std::string, Rational> m;
        for (const auto& v : {"x1", "x12", "x13", "x23"}) {
          Rational q(num(rng), den(rng));
          q.canonicalize();
          m[v] = q;
        }
        if (ricci::ricci_offdiag_check(n, m) != 0) {
          fail << tag + "nonzero off-diagonal Ricci";
          break;
        }
      }
      Decomposition d(n - 2, 1, 1);
      const auto& res = exact_run("onebl" + std::to_string(n), build_system(d));
      Rational N(n);
      Rational D = N * N * N - 2 * N * N + N - 4;
      Rational a = (N - 3) / (N - 1);
      Rational b = (N - 4) * (N - 1) * (N - 1) / D;
      Rational q = (N - 1) * (N * N - 3 * N + 4) / D;
      // The middle family also appears with x12 and x13 exchanged.
      std::vector<std::array<Rational, 4>> want = {{1, 1, 1, 1}, {a, 1, a, 1}, {a, a, 1, 1}, {b, q, q, 1}};
      std::vector<bool> seen(want.size(), false);
      for (const auto& s : res.solutions) {
        const auto* w = dynamic_cast<const AlgebraicWitness*>(s.witness.get());
        std::array<std::optional<Rational>, 4> v;
        const char* names[] = {"x1", "x12", "x13", "x23"};
        for (int i = 0; i < 4; ++i) v[i] = w ? w->rational_coordinate(*s.index_of(names[i])) : std::nullopt;
        bool known = false;
        for (std::size_t k = 0; k < want.size(); ++k) {
          bool same = true;
          for (int i = 0; i < 4; ++i) same = same && v[i] && *v[i] == want[k][i];
          if (same) seen[k] = known = true;
        }
        if (!known) fail << tag + "unexpected solution";
        if (s.classification.kind != Kind::NaturallyReductive) fail << tag + "solution not NR";
      }
      for (std::size_t k = 0; k < want.size(); ++k)
        if (!seen[k]) fail << tag + "missing x1 = " + to_string(want[k][0]);
      if (res.classes.size() != 3) fail << tag + std::to_string(res.classes.size()) + " classes";
    }
    finish(c, fail, "three NR families for every n, off-diagonal Ricci 0");
  }

  void table(Check& c) {
    c.name = "table reproduction";
    c.expected = "table for " + std::to_string(options_.table_n_min) + " <= n <= " +
                 std::to_string(options_.table_n_max) +
                 " reproduces the printed (non-NR, NR) pairs; cells exact or certified numeric; "
                 "< 2 h total, < 15 min for (3,3,1), (4,3,1), (3,1,1), (2,2,1)";
    c.source = "published table";
    auto t0 = std::chrono::steady_clock::now();
    auto cells = count_table(options_.table_n_min, options_.table_n_max, opt_, config_.threads);
    Failure fail;
    int exact = 0, numeric = 0, compared = 0;
    for (const auto& cell : cells) {
      auto ks = cell.decomposition.ks();
      auto tag = label(cell.decomposition) + ": ";
      if (cell.status == CellStatus::Exact) ++exact;
      if (cell.status == CellStatus::NumericOnly) ++numeric;
      if (cell.status == CellStatus::BudgetExceeded || cell.status == CellStatus::Failed) {
        fail << tag + to_string(cell.status) + " " + cell.error;
        continue;
      }
      if (!cell.certified) fail << tag + "uncertified";
      if (cell.undecided) fail << tag + std::to_string(cell.undecided) + " undecided";
      for (const auto& row : reference::table()) {
        if (row.k != ks) continue;
        ++compared;
        if (row.non_nr != cell.non_nr || row.nr != cell.nr)
          fail << tag + "(" + std::to_string(cell.non_nr) + ", " + std::to_string(cell.nr) + ") vs (" +
                      std::to_string(row.non_nr) + ", " + std::to_string(row.nr) + ")";
      }
      bool timed = ks == std::array{3, 3, 1} || ks == std::array{4, 3, 1} || ks == std::array{3, 1, 1} ||
                   ks == std::array{2, 2, 1};
      if (timed && cell.seconds > kLimitRow) fail << tag + "over 15 min";
      if (options_.log) {
        std::ostringstream line;
        line << tag << "(" << cell.non_nr << ", " << cell.nr << ") " << to_string(cell.status) << " "
             << cell.seconds << " s";
        options_.log(line.str());
      }
    }
    time_limit(fail, t0, kLimitTable);
    finish(c, fail,
           std::to_string(compared) + " printed cells match (" + std::to_string(exact) + " exact, " +
               std::to_string(numeric) + " certified numeric)");
  }

  void properties(Check& c) {
    c.name = "property suites";
    c.expected = "Jacobi identity for n <= 8; Sturm counts agree with isolation on 500 random polynomials; "
                 "S-polynomials reduce to 0 on computed bases; r(c g) = r(g)/c; isometry classes independent "
                 "of input order; < 5 min";
    c.source = "derived";
    auto t0 = std::chrono::steady_clock::now();
    Failure fail;
    for (int n = 3; n <= 8; ++n)
      if (!liealg::bracket_identities_hold(n)) fail << "Jacobi fails for n=" + std::to_string(n);

    std::mt19937_64 rng(20260102);
    std::uniform_int_distribution<int> deg(1, 8), coef(-20, 20), rep(1, 3);
    for (int t = 0; t < kSturmSamples; ++t) {
      UPoly p{Rational(1)};
      int factors = deg(rng) / 2 + 1;
      for (int f = 0; f < factors; ++f) {
        UPoly q;
        int dq = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int i = 0; i <= dq; ++i) q.push_back(Rational(coef(rng)));
        if (realroots::degree(q) < 1) q = UPoly{Rational(coef(rng)), Rational(1)};
        for (int r = rep(rng); r > 0; --r) p = realroots::mul(p, q);
      }
      auto ivs = realroots::isolate_real_roots(p);
      Rational B = realroots::cauchy_bound(p);
      if (static_cast<int>(ivs.size()) != realroots::count_roots(p, -B, B)) {
        fail << "isolation count differs from Sturm count";
        break;
      }
      bool ok = true;
      for (std::size_t i = 0; i < ivs.size(); ++i) {
        const auto& iv = ivs[i];
        if (iv.is_exact()) ok = ok && realroots::evaluate(p, iv.low) == 0;
        else ok = ok && realroots::count_roots(p, iv.low, iv.high) == 1;
        if (i + 1 < ivs.size()) ok = ok && iv.high <= ivs[i + 1].low;
      }
      if (!ok) {
        fail << "isolating interval does not hold exactly one root";
        break;
      }
    }

    if (runs_.empty()) {
      for (int n = 5; n <= 8; ++n) exact_run("onebl" + std::to_string(n), build_system(Decomposition(n - 2, 1, 1)));
      exact_run("221", build_system(Decomposition(2, 2, 1)));
    }
    int bases = 0;
    for (const auto& [key, res] : runs_) {
      if (!res.exact) continue;
      if (!groebner::is_groebner(res.exact->basis.polynomials, res.exact->basis.order)) fail << key + " basis";
      ++bases;
      if (res.exact->lex) {
        if (!groebner::is_groebner(res.exact->lex->polynomials, res.exact->lex->order)) fail << key + " lex basis";
        ++bases;
      }
    }

    for (const auto& d : all_partitions(5, 12))
      if (!ricci::scaling_law_holds(ricci::ricci_closed_form(d))) fail << "scaling law " + label(d);

    std::mt19937_64 shuffle_rng(20260103);
    int orders = 0;
    for (const auto& [key, res] : runs_) {
      auto rep_of = [](const std::vector<SolutionRecord>& cls) {
        std::vector<std::vector<std::string>> out;
        for (const auto& r : cls) {
          std::vector<std::string> t;
          for (const auto& iv : r.scaled) t.push_back(to_string(iv.lo) + ":" + to_string(iv.hi));
          t.push_back(to_string(r.classification.kind));
          out.push_back(t);
        }
        return out;
      };
      if (res.solutions.empty()) continue;
      auto reference = rep_of(res.classes);
      const auto& k = res.solutions.front().k;
      Decomposition d(k[0], k[1], k[2]);
      for (int t = 0; t < 5; ++t) {
        auto recs = res.solutions;
        std::shuffle(recs.begin(), recs.end(), shuffle_rng);
        if (rep_of(dedup_isometry(recs, d)) != reference) fail << key + " dedup depends on order";
        ++orders;
      }
    }
    time_limit(fail, t0, kLimitProperties);
    finish(c, fail,
           "Jacobi n <= 8, " + std::to_string(kSturmSamples) + " Sturm samples, " + std::to_string(bases) +
               " bases, scaling law, " + std::to_string(orders) + " shuffled dedups");
  }

  const Config& config_;
  const VerifyOptions& options_;
  PipelineOptions opt_;
  std::map<std::string, PipelineResult> runs_;
};

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::SkippedBudget: return "skipped(budget)";
  }
  return "fail";
}

CheckStatus check_status_from_string(const std::string& s) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "fail") return CheckStatus::Fail;
  if (s == "skipped(budget)") return CheckStatus::SkippedBudget;
  throw StructuralError("unknown check status '" + s + "'");
}

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

nlohmann::json VerificationReport::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& c : checks)
    arr.push_back({{"id", c.id},
                   {"name", c.name},
                   {"expected", c.expected},
                   {"source", c.source},
                   {"actual", c.actual},
                   {"status", cli::to_string(c.status)},
                   {"runtime", c.seconds}});
  return {{"checks", arr}, {"passed", passed()}};
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
  VerificationReport r;
  for (const auto& c : j.at("checks")) {
    Check k;
    k.id = c.at("id").get<int>();
    k.name = c.at("name").get<std::string>();
    k.expected = c.at("expected").get<std::string>();
    k.source = c.at("source").get<std::string>();
    k.actual = c.at("actual").get<std::string>();
    k.status = check_status_from_string(c.at("status").get<std::string>());
    k.seconds = c.at("runtime").get<double>();
    r.checks.push_back(std::move(k));
  }
  return r;
}

int criteria_count() { return 10; }

VerificationReport verify_paper(const Config& config, const VerifyOptions& options) {
  Suite suite(config, options);
  VerificationReport report;
  std::vector<int> ids = options.only;
  if (ids.empty())
    for (int i = 1; i <= criteria_count(); ++i) ids.push_back(i);
  for (int id : ids) {
    report.checks.push_back(suite.run(id));
    if (options.on_check) options.on_check(report.checks.back());
  }
  return report;
}

}  // namespace einso::cli
