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

#include "einso/groebner/quotient.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "einso/exact/errors.hpp"
#include "engine.hpp"

namespace einso::groebner {

std::optional<Vector> Echelon::insert_or_express(Vector v) {
  if (v.size() != dim_) throw StructuralError("vector dimension mismatch");
  std::size_t count = rows_.size();
  Vector comb(count);
  for (const auto& row : rows_) {
    if (v[row.pivot] == 0) continue;
    Rational c = v[row.pivot];
    for (std::size_t k = row.pivot; k < dim_; ++k) {
      if (row.v[k] != 0) v[k] -= c * row.v[k];
    }
    for (std::size_t k = 0; k < row.t.size(); ++k) {
      if (row.t[k] != 0) comb[k] += c * row.t[k];
    }
  }
  auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
  if (it == v.end()) return comb;
  std::size_t pivot = static_cast<std::size_t>(it - v.begin());
  Rational s = 1 / v[pivot];
  for (auto& x : v) {
    if (x != 0) x *= s;
  }
  Vector t(count + 1);
  for (std::size_t k = 0; k < count; ++k) t[k] = -comb[k] * s;
  t[count] = s;
  rows_.push_back({pivot, std::move(v), std::move(t)});
  return std::nullopt;
}

Quotient::Quotient(const GroebnerBasis& basis) : ring_(basis.ring), basis_(basis) {
  if (basis.is_unit()) return;
  if (!is_zero_dimensional(basis)) throw DomainError("quotient algebra of a positive-dimensional ideal");
  std::vector<Monomial> lms;
  for (const auto& p : basis.polynomials) lms.push_back(p.leading_term(basis.order).monomial);
  auto reducible = [&](const Monomial& m) {
    return std::any_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  std::size_t n = ring_->size();
  std::deque<Monomial> queue{Monomial(n)};
  std::unordered_map<Monomial, bool, MonomialHash> seen{{Monomial(n), true}};
  while (!queue.empty()) {
    Monomial m = queue.front();
    queue.pop_front();
    standard_.push_back(m);
    for (std::size_t v = 0; v < n; ++v) {
      Monomial x(n);
      x.set(v, 1);
      Monomial next = m * x;
      if (seen.count(next) || reducible(next)) continue;
      seen[next] = true;
      queue.push_back(next);
    }
  }
  std::sort(standard_.begin(), standard_.end(),
            [&](const Monomial& a, const Monomial& b) { return basis.order.compare(a, b) < 0; });
  for (std::size_t j = 0; j < standard_.size(); ++j) index_[standard_[j]] = j;

  detail::Frame frame(ring_, basis.order);
  std::vector<detail::RatPoly> divs;
  for (const auto& p : basis.polynomials) {
    divs.push_back(frame.to_rat(p));
    detail::make_monic(divs.back());
  }
  std::vector<const detail::RatPoly*> ptrs;
  for (const auto& d : divs) ptrs.push_back(&d);
  std::unordered_map<Monomial, SparseColumn, MonomialHash> memo;
  matrices_.assign(n, std::vector<SparseColumn>(standard_.size()));
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t j = 0; j < standard_.size(); ++j) {
      Monomial x(n);
      x.set(v, 1);
      Monomial m = standard_[j] * x;
      auto hit = memo.find(m);
      if (hit == memo.end()) {
        SparseColumn col;
        if (auto idx = index_.find(m); idx != index_.end()) {
          col.emplace_back(idx->second, Rational(1));
        } else {
          detail::RatPoly p{{frame.to_internal(m), Rational(1)}};
          for (const auto& t : detail::reduce_rat(std::move(p), ptrs, frame.order())) {
            col.emplace_back(index_.at(frame.to_ring(t.m)), t.c);
          }
        }
        hit = memo.emplace(m, std::move(col)).first;
      }
      matrices_[v][j] = hit->second;
    }
  }
}

Vector Quotient::one() const {
  Vector v(dimension());
  if (!v.empty()) v[index_.at(Monomial(ring_->size()))] = 1;
  return v;
}

Vector Quotient::coordinates(const MultiPoly& p) const {
  Vector out(dimension());
  if (out.empty()) return out;
  MultiPoly r = normal_form(p.to_ring(ring_), basis_.polynomials, basis_.order);
  for (const auto& t : r.terms()) out[index_.at(t.monomial)] = t.coeff;
  return out;
}

MultiPoly Quotient::from_coordinates(std::span<const Rational> v) const {
  std::vector<MultiPoly::Term> terms;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] != 0) terms.push_back({standard_[j], v[j]});
  }
  return MultiPoly::from_terms(ring_, std::move(terms));
}

Vector Quotient::multiply_by_variable(std::size_t var, std::span<const Rational> v) const {
  Vector out(dimension());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] == 0) continue;
    for (const auto& [i, c] : matrices_[var][j]) out[i] += c * v[j];
  }
  return out;
}

Vector Quotient::multiply(const MultiPoly& f_in, std::span<const Rational> v) const {
  MultiPoly f = f_in.to_ring(ring_);
  Vector out(dimension());
  for (const auto& t : f.terms()) {
    Vector w(v.begin(), v.end());
    for (std::size_t var = 0; var < ring_->size(); ++var) {
      for (unsigned e = 0; e < t.monomial[var]; ++e) w = multiply_by_variable(var, w);
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] != 0) out[i] += t.coeff * w[i];
    }
  }
  return out;
}

realroots::UPoly Quotient::minimal_polynomial(const MultiPoly& f) const {
  if (dimension() == 0) return {Rational(1)};
  Echelon ech(dimension());
  Vector v = one();
  while (true) {
    Vector next = multiply(f, v);
    auto dep = ech.insert_or_express(v);
    if (dep) {
      // v = f^k * 1 = sum dep[i] f^i * 1
      realroots::UPoly mu(dep->size() + 1);
      for (std::size_t i = 0; i < dep->size(); ++i) mu[i] = -(*dep)[i];
      mu.back() = 1;
      return mu;
    }
    v = std::move(next);
  }
}

std::optional<realroots::UPoly> Quotient::express_in_powers(const MultiPoly& f,
                                                            const MultiPoly& target) const {
  if (dimension() == 0) return realroots::UPoly{};
  Echelon ech(dimension());
  Vector v = one();
  while (!ech.insert_or_express(v)) v = multiply(f, v);
  auto c = ech.insert_or_express(coordinates(target));
  if (!c) return std::nullopt;
  return realroots::trimmed(*c);
}

std::optional<std::vector<realroots::UPoly>> Quotient::express_in_powers(
    const MultiPoly& f, std::span<const MultiPoly> targets) const {
  std::vector<realroots::UPoly> out;
  if (dimension() == 0) {
    out.resize(targets.size());
    return out;
  }
  Echelon ech(dimension());
  Vector v = one();
  while (!ech.insert_or_express(v)) v = multiply(f, v);
  for (const auto& t : targets) {
    auto c = ech.insert_or_express(coordinates(t));
    if (!c) return std::nullopt;
    out.push_back(realroots::trimmed(*c));
  }
  return out;
}

GroebnerBasis change_order(const GroebnerBasis& basis, const MonomialOrder& target) {
  GroebnerBasis out{basis.ring, {}, target, true, basis.stats};
  if (basis.is_unit()) {
    out.polynomials = basis.polynomials;
    return out;
  }
  Quotient q(basis);
  std::size_t n = basis.ring->size();
  auto less = [&](const Monomial& a, const Monomial& b) { return target.compare(a, b) < 0; };
  // candidate -> (variable, index of its standard parent)
  std::map<Monomial, std::pair<std::size_t, std::size_t>, decltype(less)> cands(less);
  std::vector<Monomial> std_mons;
  std::vector<Vector> std_vecs;
  std::vector<Monomial> lead_mons;
  Echelon ech(q.dimension());
  cands.emplace(Monomial(n), std::make_pair(n, std::size_t{0}));
  while (!cands.empty()) {
    auto node = cands.extract(cands.begin());
    const Monomial& m = node.key();
    if (std::any_of(lead_mons.begin(), lead_mons.end(), [&](const Monomial& l) { return l.divides(m); })) {
      continue;
    }
    auto [var, parent] = node.mapped();
    Vector v = var == n ? q.one() : q.multiply_by_variable(var, std_vecs[parent]);
    auto dep = ech.insert_or_express(v);
    if (dep) {
      std::vector<MultiPoly::Term> terms{{m, Rational(1)}};
      for (std::size_t k = 0; k < dep->size(); ++k) {
        if ((*dep)[k] != 0) terms.push_back({std_mons[k], -(*dep)[k]});
      }
      MultiPoly g = MultiPoly::from_terms(basis.ring, std::move(terms));
      out.polynomials.push_back(content_primitive(g, target).second);
      lead_mons.push_back(m);
      continue;
    }
    std::size_t idx = std_mons.size();
    std_mons.push_back(m);
    std_vecs.push_back(std::move(v));
    for (std::size_t x = 0; x < n; ++x) {
      Monomial step(n);
      step.set(x, 1);
      cands.try_emplace(m * step, std::make_pair(x, idx));
    }
  }
  std::sort(out.polynomials.begin(), out.polynomials.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    return target.compare(a.leading_term(target).monomial, b.leading_term(target).monomial) < 0;
  });
  return out;
}

}  // namespace einso::groebner
