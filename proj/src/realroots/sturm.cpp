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

#include "einso/realroots/sturm.hpp"

#include <functional>

#include "einso/exact/errors.hpp"

namespace einso::realroots {

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  UPoly s0 = squarefree(p);
  if (s0.empty()) throw DomainError("Sturm sequence of the zero polynomial");
  std::vector<UPoly> chain{s0};
  UPoly s1 = derivative(s0);
  while (!s1.empty()) {
    chain.push_back(s1);
    UPoly r = scale(rem(chain[chain.size() - 2], chain.back()), -1);
    s1 = std::move(r);
  }
  return chain;
}

SturmChain::SturmChain(const UPoly& p) : chain_(sturm_sequence(p)) {
  scaled_.reserve(chain_.size());
  for (const auto& s : chain_) scaled_.push_back(primitive(s));
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int SturmChain::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(scaled_.size());
  for (const auto& s : scaled_) signs.push_back(sign_at(s, x));
  return count_variations(signs);
}

int SturmChain::variations_right_of(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(scaled_.size());
  for (const auto& s : scaled_) signs.push_back(sign_right(s, x));
  return count_variations(signs);
}

int SturmChain::variations_at_pos_infinity() const {
  std::vector<int> signs;
  for (const auto& s : scaled_) signs.push_back(sign_at_pos_infinity(s));
  return count_variations(signs);
}

int SturmChain::variations_at_neg_infinity() const {
  std::vector<int> signs;
  for (const auto& s : scaled_) signs.push_back(sign_at_neg_infinity(s));
  return count_variations(signs);
}

int SturmChain::count(const Rational& a, const Rational& b) const {
  if (!(a < b)) throw StructuralError("count requires a < b");
  int va = sign_at(scaled_.front(), a) == 0 ? variations_right_of(a) : variations_at(a);
  return va - variations_at(b);
}

int count_roots(const UPoly& p, const Rational& a, const Rational& b) {
  return SturmChain(p).count(a, b);
}

namespace {

void bisect(const SturmChain& sc, const Rational& lo, const Rational& hi, int n,
            std::vector<IsolatingInterval>& out) {
  if (n == 0) return;
  const UPoly& s = sc.squarefree_part();
  if (n == 1) {
    if (sign_at(s, hi) == 0) {
      out.push_back({hi, hi});
    } else {
      out.push_back({lo, hi});
    }
    return;
  }
  Rational mid = (lo + hi) / 2;
  int left = sc.count(lo, mid);
  bisect(sc, lo, mid, left, out);
  bisect(sc, mid, hi, n - left, out);
}

// 1 / cauchy bound of the reversed polynomial (after removing x^k factors)
// is a strict lower bound for the absolute values of nonzero roots.
Rational nonzero_root_lower_bound(const UPoly& p) {
  UPoly t = trimmed(p);
  std::size_t k = 0;
  while (k < t.size() && t[k] == 0) ++k;
  UPoly rev(t.rbegin(), t.rend() - static_cast<std::ptrdiff_t>(k));
  return 1 / cauchy_bound(rev);
}

}  // namespace

std::vector<IsolatingInterval> isolate_roots(const UPoly& p, const Rational& a, const Rational& b) {
  SturmChain sc(p);
  std::vector<IsolatingInterval> out;
  if (!(a < b)) return out;
  bisect(sc, a, b, sc.count(a, b), out);
  return out;
}

std::vector<IsolatingInterval> isolate_positive_roots(const UPoly& p) {
  UPoly t = trimmed(p);
  if (t.empty()) throw DomainError("root isolation of the zero polynomial");
  if (t.size() == 1) return {};
  SturmChain sc(t);
  Rational lo = nonzero_root_lower_bound(t) / 2;
  Rational hi = cauchy_bound(t);
  std::vector<IsolatingInterval> out;
  bisect(sc, lo, hi, sc.count(lo, hi), out);
  return out;
}

std::vector<IsolatingInterval> isolate_real_roots(const UPoly& p) {
  UPoly t = trimmed(p);
  if (t.empty()) throw DomainError("root isolation of the zero polynomial");
  if (t.size() == 1) return {};
  SturmChain sc(t);
  Rational hi = cauchy_bound(t);
  std::vector<IsolatingInterval> out;
  bisect(sc, -hi, hi, sc.count(-hi, hi), out);
  return out;
}

IsolatingInterval refine(const UPoly& p, IsolatingInterval iv, const Rational& tol) {
  if (iv.is_exact()) return iv;
  return refine_squarefree(primitive(squarefree(p)), iv, tol);
}

IsolatingInterval refine_squarefree(const UPoly& s, IsolatingInterval iv, const Rational& tol) {
  if (iv.is_exact()) return iv;
  int sh = sign_at(s, iv.high);
  if (sh == 0) return {iv.high, iv.high};
  while (iv.high - iv.low > tol) {
    Rational mid = (iv.low + iv.high) / 2;
    int sm = sign_at(s, mid);
    if (sm == 0) return {mid, mid};
    if (sm == sh) {
      iv.high = mid;
    } else {
      iv.low = mid;
    }
  }
  return iv;
}

bool rational_root_in(const UPoly& p, const IsolatingInterval& iv, Rational& out) {
  if (iv.is_exact()) {
    out = iv.low;
    return true;
  }
  // A rational root of a primitive integer polynomial is k / lc for an
  // integer k, so an interval narrower than 1 / |lc| holds one candidate.
  UPoly s = primitive(squarefree(p));
  Integer lc = abs(s.back().get_num());
  Rational tol(1, Integer(lc * 2));
  IsolatingInterval r = refine(s, iv, tol);
  if (r.is_exact()) {
    out = r.low;
    return true;
  }
  Rational scaled_hi = r.high * lc;
  Integer k = scaled_hi.get_num() / scaled_hi.get_den();
  if (scaled_hi < 0 && Rational(k) != scaled_hi) k -= 1;  // floor
  Rational cand(k, lc);
  cand.canonicalize();
  if (cand > r.low && sign_at(s, cand) == 0) {
    out = cand;
    return true;
  }
  return false;
}

}  // namespace einso::realroots
