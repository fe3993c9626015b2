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

#include "einso/realroots/upoly.hpp"

#include <algorithm>

#include "einso/exact/errors.hpp"

namespace einso::realroots {

UPoly trimmed(UPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int degree(const UPoly& p) {
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

Rational leading_coeff(const UPoly& p) {
  int d = degree(p);
  return d < 0 ? Rational(0) : p[static_cast<std::size_t>(d)];
}

UPoly add(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return trimmed(std::move(r));
}

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return trimmed(std::move(r));
}

UPoly mul(const UPoly& a_in, const UPoly& b_in) {
  UPoly a = trimmed(a_in), b = trimmed(b_in);
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return trimmed(std::move(r));
}

UPoly scale(const UPoly& a, const Rational& c) {
  if (c == 0) return {};
  UPoly r = trimmed(a);
  for (auto& x : r) x *= c;
  return r;
}

UPoly derivative(const UPoly& p_in) {
  UPoly p = trimmed(p_in);
  if (p.size() <= 1) return {};
  UPoly r(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * static_cast<long>(i);
  return trimmed(std::move(r));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a_in, const UPoly& b_in) {
  UPoly a = trimmed(a_in), b = trimmed(b_in);
  if (b.empty()) throw DomainError("polynomial division by zero");
  if (a.size() < b.size()) return {UPoly{}, a};
  UPoly q(a.size() - b.size() + 1);
  Rational inv = 1 / b.back();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    Rational c = a[k] * inv;
    std::size_t shift = k - (b.size() - 1);
    q[shift] = c;
    if (c != 0) {
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    }
    if (k == b.size() - 1) break;
  }
  a.resize(b.size() - 1);
  return {trimmed(std::move(q)), trimmed(std::move(a))};
}

UPoly rem(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

UPoly monic(const UPoly& p) {
  UPoly t = trimmed(p);
  if (t.empty()) return t;
  return scale(t, 1 / t.back());
}

UPoly gcd(const UPoly& a_in, const UPoly& b_in) {
  UPoly a = primitive(a_in), b = primitive(b_in);
  while (!b.empty()) {
    UPoly r = primitive(rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

UPoly squarefree(const UPoly& p) {
  UPoly t = trimmed(p);
  if (t.size() <= 1) return t;
  UPoly g = gcd(t, derivative(t));
  if (g.size() <= 1) return t;
  return divmod(t, g).first;
}

UPoly primitive(const UPoly& p) {
  UPoly t = trimmed(p);
  if (t.empty()) return t;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& c : t) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational f(den_lcm, num_gcd);
  f.canonicalize();
  for (auto& c : t) c *= f;
  return t;
}

UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& m) {
  UPoly r = mul(a, b);
  return m.empty() ? r : rem(r, m);
}

UPoly compose_mod(const UPoly& p_in, const UPoly& q, const UPoly& m) {
  UPoly p = trimmed(p_in);
  UPoly acc;
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = add(mulmod(acc, q, m), UPoly{p[i]});
  }
  return m.empty() ? acc : rem(acc, m);
}

Rational evaluate(const UPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

int sign_at(const UPoly& p, const Rational& x) {
  // Integer Horner on the homogenized polynomial avoids rational gcds.
  UPoly t = trimmed(p);
  if (t.empty()) return 0;
  Integer den_lcm = 1;
  for (const auto& c : t) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  const Integer& u = x.get_num();
  const Integer& v = x.get_den();
  Integer acc = 0, vpow = 1;
  // acc = sum c_i u^i v^(n-i), built by Horner from the top.
  for (std::size_t i = t.size(); i-- > 0;) {
    Integer ci = t[i].get_num() * (den_lcm / t[i].get_den());
    acc = acc * u + ci * vpow;
    vpow *= v;
  }
  return sgn(acc);
}

int sign_right(const UPoly& p, const Rational& x) {
  UPoly d = trimmed(p);
  while (!d.empty()) {
    int s = sign_at(d, x);
    if (s != 0) return s;
    d = derivative(d);
  }
  return 0;
}

int sign_at_pos_infinity(const UPoly& p) { return sgn(leading_coeff(p)); }

int sign_at_neg_infinity(const UPoly& p) {
  int d = degree(p);
  if (d < 0) return 0;
  int s = sgn(leading_coeff(p));
  return (d % 2 == 0) ? s : -s;
}

int descartes_variations(const UPoly& p) {
  int variations = 0, last = 0;
  for (const auto& c : p) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

Rational cauchy_bound(const UPoly& p_in) {
  UPoly p = trimmed(p_in);
  if (p.size() <= 1) return Rational(1);
  Rational lc = abs(p.back());
  Rational m = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, Rational(abs(p[i]) / lc));
  return m + 1;
}

std::string to_string(const UPoly& p_in, const std::string& var) {
  UPoly p = trimmed(p_in);
  if (p.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0) continue;
    Rational c = p[i];
    bool neg = c < 0;
    if (neg) c = -c;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    if (i == 0) {
      out += einso::to_string(c);
      continue;
    }
    if (c != 1) out += einso::to_string(c) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

Interval operator*(const Interval& a, const Rational& c) {
  if (c >= 0) return {a.lo * c, a.hi * c};
  return {a.hi * c, a.lo * c};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("interval division by an interval containing zero");
  return a * Interval{1 / b.hi, 1 / b.lo};
}

Interval hull(const Interval& a, const Interval& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

Interval widen_to_dyadic(const Interval& a, unsigned bits) {
  return {round_down(a.lo, bits), round_up(a.hi, bits)};
}

Interval evaluate(const UPoly& p, const Interval& x, unsigned bits) {
  if (x.is_point()) {
    Rational v = evaluate(p, x.lo);
    return {v, v};
  }
  Interval acc{0, 0};
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * x + Interval::point(p[i]);
    if (bits) acc = widen_to_dyadic(acc, bits);
  }
  return acc;
}

}  // namespace einso::realroots
