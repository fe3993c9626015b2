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

#include "einso/groebner/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "einso/exact/errors.hpp"
#include "engine.hpp"

namespace einso::groebner {

Ideal::Ideal(RingPtr ring_in, std::vector<MultiPoly> gens, MonomialOrder order_in)
    : ring(std::move(ring_in)), order(std::move(order_in)) {
  if (order.size() != ring->size()) throw StructuralError("order does not match ring size");
  for (auto& g : gens) {
    if (!(g.ring() == *ring)) throw StructuralError("generator outside the ideal's ring");
    if (!g.is_zero()) generators.push_back(std::move(g));
  }
}

bool GroebnerBasis::is_unit() const {
  return polynomials.size() == 1 && polynomials.front().is_constant() &&
         !polynomials.front().is_zero();
}

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                      const MonomialOrder& order) {
  detail::Frame frame(p.ring_ptr(), order);
  std::vector<detail::RatPoly> divs;
  for (const auto& b : basis) {
    if (b.is_zero()) continue;
    divs.push_back(frame.to_rat(b));
    detail::make_monic(divs.back());
  }
  std::vector<const detail::RatPoly*> ptrs;
  for (const auto& d : divs) ptrs.push_back(&d);
  return frame.from_rat(detail::reduce_rat(frame.to_rat(p), ptrs, frame.order()));
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) throw StructuralError("S-polynomial of zero");
  if (!(f.ring() == g.ring())) throw StructuralError("polynomial ring mismatch");
  const auto& lf = f.leading_term(order);
  const auto& lg = g.leading_term(order);
  Monomial l = lcm(lf.monomial, lg.monomial);
  return f.mul_term(l / lf.monomial, 1 / lf.coeff) - g.mul_term(l / lg.monomial, 1 / lg.coeff);
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const Budget& budget) {
  auto t0 = std::chrono::steady_clock::now();
  detail::Frame frame(ideal.ring, ideal.order);
  std::vector<detail::IntPoly> gens;
  for (const auto& g : ideal.generators) gens.push_back(frame.to_int(g));
  GroebnerBasis out{ideal.ring, {}, ideal.order, true, {}};
  detail::BudgetTracker tracker(budget);
  auto basis = detail::buchberger_core(std::move(gens), frame.order(), tracker, out.stats);
  for (const auto& b : basis) out.polynomials.push_back(frame.from_int(b));
  out.stats.reductions = tracker.reductions();
  out.stats.work = tracker.work();
  out.stats.seconds = seconds_since(t0);
  return out;
}

GroebnerBasis two_stage(const Ideal& ideal, const Budget& budget) {
  if (ideal.order.kind() != OrderKind::Lex) throw StructuralError("two-stage path targets a lex order");
  auto t0 = std::chrono::steady_clock::now();
  Ideal graded(ideal.ring, ideal.generators, ideal.order.with_kind(OrderKind::GrevLex));
  GroebnerBasis first = buchberger(graded, budget);
  GroebnerBasis out;
  if (first.is_unit()) {
    out = first;
    out.order = ideal.order;
  } else {
    if (!is_zero_dimensional(first)) {
      throw DomainError("ideal is not zero-dimensional; order conversion unavailable");
    }
    out = change_order(first, ideal.order);
  }
  out.stats = first.stats;
  out.stats.seconds = seconds_since(t0);
  return out;
}

Ideal saturate(const Ideal& ideal, std::span<const std::string> vars_nonzero,
               const std::string& fresh) {
  std::vector<MultiPoly> factors;
  for (const auto& v : vars_nonzero) factors.push_back(MultiPoly::variable(ideal.ring, v));
  return saturate_by(ideal, factors, fresh);
}

Ideal saturate_by(const Ideal& ideal, std::span<const MultiPoly> nonzero, const std::string& fresh) {
  if (nonzero.empty()) return ideal;
  if (ideal.ring->index_of(fresh)) throw StructuralError("saturation variable '" + fresh + "' already in ring");
  std::vector<std::string> names{fresh};
  for (const auto& n : ideal.ring->names()) names.push_back(n);
  RingPtr ring = make_ring(names);
  std::vector<std::size_t> prec{0};
  for (std::size_t v : ideal.order.precedence()) prec.push_back(v + 1);
  MonomialOrder order(ideal.order.kind(), prec);
  std::vector<MultiPoly> gens;
  for (const auto& g : ideal.generators) gens.push_back(g.to_ring(ring));
  MultiPoly prod = MultiPoly::variable(ring, fresh);
  for (const auto& f : nonzero) {
    if (!(f.ring() == *ideal.ring)) throw StructuralError("saturating polynomial outside the ring");
    prod *= f.to_ring(ring);
  }
  gens.push_back(prod - MultiPoly::constant(ring, 1));
  return Ideal(ring, std::move(gens), order);
}

std::vector<MultiPoly> eliminate(const GroebnerBasis& basis, std::span<const std::string> keep) {
  if (basis.order.kind() != OrderKind::Lex) throw StructuralError("elimination needs a lex basis");
  std::vector<std::size_t> keep_idx;
  for (const auto& k : keep) keep_idx.push_back(basis.ring->require(k));
  const auto& prec = basis.order.precedence();
  bool seen_kept = false;
  for (std::size_t v : prec) {
    bool kept = std::find(keep_idx.begin(), keep_idx.end(), v) != keep_idx.end();
    if (kept) {
      seen_kept = true;
    } else if (seen_kept) {
      throw StructuralError("lex order does not eliminate '" + basis.ring->name(v) + "' before the kept variables");
    }
  }
  std::vector<MultiPoly> out;
  for (const auto& p : basis.polynomials) {
    if (p.involves_only(keep_idx)) out.push_back(p);
  }
  return out;
}

bool is_groebner(const std::vector<MultiPoly>& polys, const MonomialOrder& order,
                 std::size_t sample_limit) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = i + 1; j < polys.size(); ++j) pairs.emplace_back(i, j);
  }
  std::size_t stride = 1;
  if (sample_limit > 0 && pairs.size() > sample_limit) stride = pairs.size() / sample_limit;
  for (std::size_t k = 0; k < pairs.size(); k += stride) {
    auto [i, j] = pairs[k];
    const Monomial& a = polys[i].leading_term(order).monomial;
    const Monomial& b = polys[j].leading_term(order).monomial;
    if (a.coprime(b)) continue;
    if (!normal_form(s_polynomial(polys[i], polys[j], order), polys, order).is_zero()) return false;
  }
  return true;
}

bool is_zero_dimensional(const GroebnerBasis& basis) {
  if (basis.is_unit()) return true;
  std::size_t n = basis.ring->size();
  std::vector<bool> pure(n, false);
  for (const auto& p : basis.polynomials) {
    const Monomial& m = p.leading_term(basis.order).monomial;
    auto mask = m.support_mask();
    if (mask != 0 && (mask & (mask - 1)) == 0) {
      for (std::size_t v = 0; v < n; ++v) {
        if (mask == (1u << v)) pure[v] = true;
      }
    }
  }
  return std::all_of(pure.begin(), pure.end(), [](bool b) { return b; });
}

std::string order_to_string(const Ring& ring, const MonomialOrder& order) {
  std::string s = order.kind() == OrderKind::Lex ? "lex(" : "grevlex(";
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k) s += ">";
    s += ring.name(order.precedence()[k]);
  }
  return s + ")";
}

std::string ideal_key(const Ideal& ideal) {
  std::uint64_t h = 1469598103934665603ull;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  };
  for (const auto& n : ideal.ring->names()) feed(n);
  feed(order_to_string(*ideal.ring, ideal.order));
  for (const auto& g : ideal.generators) feed(g.to_string());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace einso::groebner
