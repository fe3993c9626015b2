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

#include <algorithm>

#include "einso/einstein/solve.hpp"
#include "einso/exact/errors.hpp"
#include "einso/groebner/quotient.hpp"
#include "einso/realroots/sturm.hpp"

namespace einso::einstein {

namespace {

constexpr const char* kFresh = "z";

// Deterministic candidates t, t + x_a, t + 2 x_a + x_b, ...
MultiPoly separating_candidate(const RingPtr& ring, const std::vector<std::string>& prec, int attempt) {
  MultiPoly u = MultiPoly::variable(ring, prec.back());
  if (attempt == 0) return u;
  for (std::size_t j = 0; j + 1 < prec.size(); ++j) {
    long c = (static_cast<long>(attempt) * static_cast<long>(j + 3) + static_cast<long>(j * j)) % 11 - 5;
    if (c != 0) u += MultiPoly::variable(ring, prec[j]) * Rational(c);
  }
  return u;
}

}  // namespace

ExactResult solve_exact(const EinsteinSystem& sys, const ExactOptions& opt) {
  ExactResult out;
  const auto& prec = sys.precedence;
  out.eliminant_variable = prec.back();

  groebner::Ideal base(sys.ring, sys.polynomials, grevlex_order(*sys.ring, prec));
  std::vector<MultiPoly> nonzero;
  for (const auto& v : prec) nonzero.push_back(MultiPoly::variable(sys.ring, v));
  for (const auto& s : opt.nonzero) nonzero.push_back(parse_poly(s, sys.ring));
  groebner::Ideal sat = groebner::saturate_by(base, nonzero, kFresh);

  groebner::GroebnerBasis g;
  try {
    g = groebner::cached_buchberger(sat, opt.budget, opt.cache.get());
  } catch (const BudgetExceeded& e) {
    throw BudgetExceeded(std::string(e.what()) + "; retry with the numeric method");
  }
  out.stats = g.stats;
  out.basis = g;
  if (g.is_unit()) {
    out.eliminant = {Rational(1)};
    return out;
  }
  if (!groebner::is_zero_dimensional(g)) throw DomainError("solution set is positive-dimensional");

  const RingPtr& ring = g.ring;
  groebner::Quotient q(g);
  out.quotient_dimension = q.dimension();
  std::vector<std::string> unknowns(prec.begin(), prec.end());
  std::vector<MultiPoly> targets;
  for (const auto& v : unknowns) targets.push_back(MultiPoly::variable(ring, v));

  // A separating element whose minimal polynomial has full degree gives the
  // unknowns as polynomials in its root, and shows the ideal is radical.
  auto separate = [&](const groebner::Quotient& qq, int attempts, UPoly& mu,
                      std::vector<UPoly>& rep) -> bool {
    for (int attempt = 0; attempt < attempts; ++attempt) {
      MultiPoly u = separating_candidate(ring, unknowns, attempt);
      UPoly m = qq.minimal_polynomial(u);
      if (attempt == 0 && &qq == &q) out.eliminant = realroots::primitive(m);
      if (static_cast<std::size_t>(realroots::degree(m)) != qq.dimension()) continue;
      auto r = qq.express_in_powers(u, targets);
      if (!r) continue;
      mu = std::move(m);
      rep = std::move(*r);
      return true;
    }
    return false;
  };

  UPoly mu;
  std::vector<UPoly> rep;
  bool found = separate(q, 3, mu, rep);
  out.radical_dimension = q.dimension();
  if (!found) {
    // Radical: adjoin the square-free parts of the variables' minimal polynomials.
    std::vector<MultiPoly> extra;
    for (const auto& name : ring->names()) {
      UPoly m = q.minimal_polynomial(MultiPoly::variable(ring, name));
      UPoly sq = realroots::squarefree(m);
      if (realroots::degree(sq) < realroots::degree(m)) extra.push_back(from_univariate(ring, name, sq));
    }
    groebner::GroebnerBasis rad = g;
    if (!extra.empty()) {
      std::vector<MultiPoly> gens = g.polynomials;
      gens.insert(gens.end(), extra.begin(), extra.end());
      rad = groebner::cached_buchberger(groebner::Ideal(ring, gens, g.order), opt.budget, opt.cache.get());
    }
    groebner::Quotient qr(rad);
    out.radical_dimension = qr.dimension();
    if (!separate(qr, 64, mu, rep)) throw StructuralError("no separating element found");
  }

  if (opt.lex_basis) {
    auto lex = groebner::change_order(g, sat.order.with_kind(OrderKind::Lex));
    std::vector<std::string> keep{out.eliminant_variable};
    auto uni = groebner::eliminate(lex, keep);
    if (uni.size() != 1) throw StructuralError("lex basis lacks a unique eliminant");
    out.eliminant = realroots::primitive(to_univariate(uni.front(), out.eliminant_variable));
    out.lex = std::move(lex);
  }

  // Coordinates of the unknowns as polynomials in the root, then the metric.
  std::vector<UPoly> by_index(sys.ring->size());
  for (std::size_t j = 0; j < unknowns.size(); ++j) by_index[sys.ring->require(unknowns[j])] = rep[j];
  const RingPtr& metric_ring = sys.ricci.ring;
  std::vector<UPoly> metric_coords;
  for (const auto& name : metric_ring->names())
    metric_coords.push_back(compose_mod(sys.metric.at(name), by_index, mu));

  for (const auto& root : realroots::isolate_real_roots(mu)) {
    auto w = std::make_shared<AlgebraicWitness>(metric_ring, mu, root, metric_coords);
    bool positive = true;
    for (const auto& name : metric_ring->names())
      positive = positive && w->sign(MultiPoly::variable(metric_ring, name)) > 0;
    if (!positive) continue;
    SolutionRecord rec;
    rec.k = sys.decomposition.ks();
    rec.variables = metric_ring->names();
    rec.coords = w->enclose(opt.width);
    rec.status = Status::Exact;
    rec.witness = std::move(w);
    out.solutions.push_back(std::move(rec));
  }
  return out;
}

}  // namespace einso::einstein
