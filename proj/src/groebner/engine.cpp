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

#include "engine.hpp"

#include <algorithm>
#include <tuple>

#include "einso/exact/errors.hpp"

namespace einso::groebner::detail {

Frame::Frame(RingPtr ring, const MonomialOrder& order)
    : ring_(std::move(ring)), ring_order_(order), order_{order.kind(), order.size()} {
  if (order.size() != ring_->size()) throw StructuralError("order does not match ring size");
}

Monomial Frame::to_internal(const Monomial& m) const {
  Monomial r(m.size());
  const auto& prec = ring_order_.precedence();
  for (std::size_t k = 0; k < prec.size(); ++k) r.set(k, m[prec[k]]);
  return r;
}

Monomial Frame::to_ring(const Monomial& m) const {
  Monomial r(m.size());
  const auto& prec = ring_order_.precedence();
  for (std::size_t k = 0; k < prec.size(); ++k) r.set(prec[k], m[k]);
  return r;
}

namespace {

template <class C>
void sort_desc(Poly<C>& p, const Order& ord) {
  std::sort(p.begin(), p.end(),
            [&](const Term<C>& a, const Term<C>& b) { return ord.cmp(a.m, b.m) > 0; });
}

}  // namespace

IntPoly Frame::to_int(const MultiPoly& p) const {
  if (!(p.ring() == *ring_)) throw StructuralError("polynomial ring mismatch");
  Integer den = 1;
  for (const auto& t : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  IntPoly out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    out.push_back({to_internal(t.monomial), t.coeff.get_num() * (den / t.coeff.get_den())});
  }
  sort_desc(out, order_);
  make_primitive(out);
  return out;
}

RatPoly Frame::to_rat(const MultiPoly& p) const {
  if (!(p.ring() == *ring_)) throw StructuralError("polynomial ring mismatch");
  RatPoly out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({to_internal(t.monomial), t.coeff});
  sort_desc(out, order_);
  return out;
}

MultiPoly Frame::from_int(const IntPoly& p) const {
  std::vector<MultiPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p) terms.push_back({to_ring(t.m), Rational(t.c)});
  return MultiPoly::from_terms(ring_, std::move(terms));
}

MultiPoly Frame::from_rat(const RatPoly& p) const {
  std::vector<MultiPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p) terms.push_back({to_ring(t.m), t.c});
  return MultiPoly::from_terms(ring_, std::move(terms));
}

void BudgetTracker::step() {
  if (++reductions_ > budget_.max_reductions) {
    throw BudgetExceeded("reduction step budget exhausted (" +
                         std::to_string(budget_.max_reductions) + " steps)");
  }
}

void BudgetTracker::work(std::uint64_t units) {
  work_ += units;
  if (budget_.max_work && work_ > budget_.max_work) {
    throw BudgetExceeded("coefficient work budget exhausted (" + std::to_string(budget_.max_work) +
                         " limb products)");
  }
}

void BudgetTracker::store(std::size_t bytes) {
  stored_ += bytes;
  check_transient(0);
}

void BudgetTracker::check_transient(std::size_t bytes) const {
  if (stored_ + bytes > budget_.max_bytes) {
    throw BudgetExceeded("term storage budget exhausted (" + std::to_string(budget_.max_bytes) +
                         " bytes)");
  }
}

std::uint64_t limb_count(const IntPoly& p, std::size_t from) {
  std::uint64_t n = 0;
  for (std::size_t i = from; i < p.size(); ++i) n += mpz_size(p[i].c.get_mpz_t());
  return n;
}

std::size_t byte_size(const IntPoly& p) {
  std::size_t b = p.size() * sizeof(Term<Integer>);
  for (const auto& t : p) b += mpz_size(t.c.get_mpz_t()) * sizeof(mp_limb_t);
  return b;
}

void make_primitive(IntPoly& p) {
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(p.front().c) < 0) g = -g;
  if (g != 1) {
    for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  }
}

void make_monic(RatPoly& p) {
  if (p.empty() || p.front().c == 1) return;
  Rational inv = 1 / p.front().c;
  for (auto& t : p) t.c *= inv;
}

namespace {

// out = b * p[ps..] - a * m * g[gs..]
IntPoly combine(const Integer& b, const IntPoly& p, std::size_t ps, const Integer& a,
                const Monomial& m, const IntPoly& g, std::size_t gs, const Order& ord) {
  IntPoly out;
  out.reserve((p.size() - ps) + (g.size() - gs));
  std::size_t i = ps, j = gs;
  bool b_one = b == 1;
  Monomial gm;
  bool have_gm = false;
  while (i < p.size() || j < g.size()) {
    if (j < g.size() && !have_gm) {
      gm = m * g[j].m;
      have_gm = true;
    }
    int c = i >= p.size() ? -1 : (j >= g.size() ? 1 : ord.cmp(p[i].m, gm));
    if (c > 0) {
      out.push_back({p[i].m, b_one ? p[i].c : Integer(b * p[i].c)});
      ++i;
    } else if (c < 0) {
      out.push_back({gm, Integer(-a * g[j].c)});
      ++j;
      have_gm = false;
    } else {
      Integer v = b_one ? Integer(p[i].c - a * g[j].c) : Integer(b * p[i].c - a * g[j].c);
      if (v != 0) out.push_back({gm, std::move(v)});
      ++i;
      ++j;
      have_gm = false;
    }
  }
  return out;
}

RatPoly combine_rat(const RatPoly& p, std::size_t ps, const Rational& a, const Monomial& m,
                    const RatPoly& g, std::size_t gs, const Order& ord) {
  RatPoly out;
  out.reserve((p.size() - ps) + (g.size() - gs));
  std::size_t i = ps, j = gs;
  Monomial gm;
  bool have_gm = false;
  while (i < p.size() || j < g.size()) {
    if (j < g.size() && !have_gm) {
      gm = m * g[j].m;
      have_gm = true;
    }
    int c = i >= p.size() ? -1 : (j >= g.size() ? 1 : ord.cmp(p[i].m, gm));
    if (c > 0) {
      out.push_back(p[i]);
      ++i;
    } else if (c < 0) {
      out.push_back({gm, Rational(-a * g[j].c)});
      ++j;
      have_gm = false;
    } else {
      Rational v = p[i].c - a * g[j].c;
      if (v != 0) out.push_back({gm, std::move(v)});
      ++i;
      ++j;
      have_gm = false;
    }
  }
  return out;
}

template <class C>
const Poly<C>* find_divisor(const Monomial& m, const std::vector<const Poly<C>*>& divisors) {
  const Poly<C>* best = nullptr;
  std::uint32_t mask = m.support_mask();
  for (const Poly<C>* g : divisors) {
    const Monomial& lm = g->front().m;
    if ((lm.support_mask() & ~mask) != 0) continue;
    if (!lm.divides(m)) continue;
    if (!best || g->size() < best->size()) best = g;
  }
  return best;
}

// Removes the common content of rest and r (early exit when it is 1).
void reduce_content(IntPoly& p, std::size_t ps, IntPoly& r) {
  Integer g = 0;
  for (std::size_t i = ps; i < p.size(); ++i) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p[i].c.get_mpz_t());
    if (g == 1) return;
  }
  for (const auto& t : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0) return;
  for (std::size_t i = ps; i < p.size(); ++i) {
    mpz_divexact(p[i].c.get_mpz_t(), p[i].c.get_mpz_t(), g.get_mpz_t());
  }
  for (auto& t : r) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

IntPoly reduce_int(IntPoly p, const std::vector<const IntPoly*>& divisors, const Order& ord,
                   BudgetTracker* budget) {
  IntPoly r;
  std::size_t ps = 0;
  unsigned since_content = 0;
  while (ps < p.size()) {
    const IntPoly* g = find_divisor(p[ps].m, divisors);
    if (!g) {
      r.push_back(std::move(p[ps]));
      ++ps;
      continue;
    }
    Integer a = p[ps].c, b = g->front().c, d;
    mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t());
    if (sgn(b) < 0) {
      b = -b;
      a = -a;
    }
    Monomial m = p[ps].m / g->front().m;
    if (budget) {
      std::uint64_t lb = mpz_size(b.get_mpz_t());
      std::uint64_t la = mpz_size(a.get_mpz_t());
      std::uint64_t rest = limb_count(p, ps + 1) + (lb > 1 ? limb_count(r) : 0);
      budget->work(lb * rest + la * limb_count(*g, 1));
    }
    p = combine(b, p, ps + 1, a, m, *g, 1, ord);
    ps = 0;
    if (b != 1) {
      for (auto& t : r) t.c *= b;
    }
    if (budget) {
      budget->step();
      if ((budget->reductions() & 63) == 0) budget->check_transient(byte_size(p) + byte_size(r));
    }
    if (++since_content >= 8) {
      reduce_content(p, ps, r);
      since_content = 0;
    }
  }
  make_primitive(r);
  return r;
}

RatPoly reduce_rat(RatPoly p, const std::vector<const RatPoly*>& divisors, const Order& ord) {
  RatPoly r;
  std::size_t ps = 0;
  while (ps < p.size()) {
    const RatPoly* g = find_divisor(p[ps].m, divisors);
    if (!g) {
      r.push_back(std::move(p[ps]));
      ++ps;
      continue;
    }
    Rational a = p[ps].c / g->front().c;
    Monomial m = p[ps].m / g->front().m;
    p = combine_rat(p, ps + 1, a, m, *g, 1, ord);
    ps = 0;
  }
  return r;
}

IntPoly spoly_int(const IntPoly& f, const IntPoly& g, const Order& ord) {
  Monomial l = lcm(f.front().m, g.front().m);
  Integer a = f.front().c, b = g.front().c, d;
  mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t());
  // b * (l/lm f) * f - a * (l/lm g) * g
  Monomial mf = l / f.front().m;
  IntPoly fs;
  fs.reserve(f.size());
  for (const auto& t : f) fs.push_back({mf * t.m, t.c});
  return combine(b, fs, 1, a, l / g.front().m, g, 1, ord);
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(const Order& ord, BudgetTracker& budget, GroebnerStats& stats)
      : ord_(ord), budget_(budget), stats_(stats) {}

  std::vector<IntPoly> run(std::vector<IntPoly> gens) {
    std::sort(gens.begin(), gens.end(), [&](const IntPoly& a, const IntPoly& b) {
      return ord_.cmp(a.front().m, b.front().m) < 0;
    });
    for (auto& g : gens) {
      IntPoly h = reduce_int(std::move(g), active_divisors(), ord_, &budget_);
      if (h.empty()) continue;
      if (h.front().m.is_one()) return {IntPoly{{h.front().m, Integer(1)}}};
      add(std::move(h));
    }
    while (!pairs_.empty()) {
      Pair p = pop_pair();
      ++stats_.pairs;
      IntPoly s = spoly_int(polys_[p.i], polys_[p.j], ord_);
      budget_.step();
      IntPoly h = reduce_int(std::move(s), active_divisors(), ord_, &budget_);
      if (h.empty()) continue;
      if (h.front().m.is_one()) return {IntPoly{{h.front().m, Integer(1)}}};
      add(std::move(h));
    }
    return interreduce();
  }

 private:
  std::vector<const IntPoly*> active_divisors() const {
    std::vector<const IntPoly*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) out.push_back(&polys_[k]);
    }
    return out;
  }

  Pair pop_pair() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      if (pair_less(pairs_[k], pairs_[best])) best = k;
    }
    Pair p = pairs_[best];
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    return p;
  }

  bool pair_less(const Pair& a, const Pair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    int c = ord_.cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  }

  // Gebauer-Moeller update.
  void add(IntPoly h_poly) {
    budget_.store(byte_size(h_poly));
    std::size_t h = polys_.size();
    polys_.push_back(std::move(h_poly));
    active_.push_back(false);
    const Monomial& lh = polys_[h].front().m;

    std::vector<std::size_t> cands;
    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g]) cands.push_back(g);
    }
    std::vector<Pair> kept;
    for (std::size_t idx = 0; idx < cands.size(); ++idx) {
      std::size_t g1 = cands[idx];
      const Monomial& lg1 = polys_[g1].front().m;
      Monomial l1 = lcm(lh, lg1);
      bool keep = true;
      if (!lh.coprime(lg1)) {
        for (std::size_t k = idx + 1; k < cands.size() && keep; ++k) {
          if (lcm(lh, polys_[cands[k]].front().m).divides(l1)) keep = false;
        }
        for (const auto& d : kept) {
          if (!keep) break;
          if (d.lcm.divides(l1)) keep = false;
        }
      }
      if (keep) {
        kept.push_back({g1, h, l1});
      } else {
        ++stats_.pairs_pruned;
      }
    }
    std::vector<Pair> next;
    for (const auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && lcm(polys_[p.i].front().m, lh) != p.lcm &&
                  lcm(polys_[p.j].front().m, lh) != p.lcm;
      if (drop) {
        ++stats_.pairs_pruned;
      } else {
        next.push_back(p);
      }
    }
    for (const auto& p : kept) {
      if (lh.coprime(polys_[p.i].front().m)) {
        ++stats_.pairs_pruned;
      } else {
        next.push_back(p);
      }
    }
    pairs_ = std::move(next);
    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g] && lh.divides(polys_[g].front().m)) active_[g] = false;
    }
    active_[h] = true;
  }

  std::vector<IntPoly> interreduce() {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) idx.push_back(k);
    }
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return ord_.cmp(polys_[a].front().m, polys_[b].front().m) < 0;
    });
    // Ascending order: each element only needs the already reduced smaller ones
    // plus the leading terms of larger ones, which never divide its terms.
    std::vector<IntPoly> out;
    for (std::size_t k : idx) {
      std::vector<const IntPoly*> divs;
      for (const auto& o : out) divs.push_back(&o);
      out.push_back(reduce_int(polys_[k], divs, ord_, &budget_));
    }
    return out;
  }

  const Order& ord_;
  BudgetTracker& budget_;
  GroebnerStats& stats_;
  std::vector<IntPoly> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::vector<IntPoly> buchberger_core(std::vector<IntPoly> gens, const Order& ord,
                                     BudgetTracker& budget, GroebnerStats& stats) {
  std::vector<IntPoly> nonzero;
  for (auto& g : gens) {
    if (!g.empty()) nonzero.push_back(std::move(g));
  }
  if (nonzero.empty()) return {};
  return Buchberger(ord, budget, stats).run(std::move(nonzero));
}

}  // namespace einso::groebner::detail
