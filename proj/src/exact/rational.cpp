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

#include "einso/exact/rational.hpp"

#include <cmath>

#include "einso/exact/errors.hpp"

namespace einso {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw StructuralError("malformed rational: " + std::string(text));
    }
    Integer d{std::string(den)};
    if (d == 0) throw DomainError("zero denominator: " + std::string(text));
    out = Rational(Integer(std::string(num)), d);
    out.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw StructuralError("malformed decimal: " + std::string(text));
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer digits(std::string(whole.empty() ? "0" : whole) + std::string(frac));
    out = Rational(digits, scale);
    out.canonicalize();
  } else {
    if (!all_digits(s)) throw StructuralError("malformed rational: " + std::string(text));
    out = Rational(Integer(std::string(s)));
  }
  if (negative) out = -out;
  return out;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

double to_double(const Rational& q) { return mpq_get_d(q.get_mpq_t()); }

Rational from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite double");
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

Rational simplest_between(const Rational& lo_in, const Rational& hi_in) {
  // Stern-Brocot descent via continued fractions of the two endpoints.
  Rational lo = lo_in, hi = hi_in;
  if (lo > hi) std::swap(lo, hi);
  if (lo <= 0 && hi >= 0) return Rational(0);
  bool negative = hi < 0;
  if (negative) {
    Rational t = -lo;
    lo = -hi;
    hi = t;
  }
  // Find simplest in [lo, hi] with 0 < lo.
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;  // convergent recurrences
  Rational a = lo, b = hi;
  for (;;) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    if (Rational(fl) == a) {
      Integer p = fl * p1 + p0, q = fl * q1 + q0;
      Rational r(p, q);
      r.canonicalize();
      return negative ? Rational(-r) : r;
    }
    Integer cb;
    mpz_fdiv_q(cb.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
    if (cb > fl) {
      Integer t = fl + 1;
      Integer p = t * p1 + p0, q = t * q1 + q0;
      Rational r(p, q);
      r.canonicalize();
      return negative ? Rational(-r) : r;
    }
    Integer p = fl * p1 + p0, q = fl * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p;
    q1 = q;
    Rational na = 1 / (b - fl);
    Rational nb = 1 / (a - fl);
    a = na;
    b = nb;
  }
}

Rational round_down(const Rational& q, unsigned bits) {
  Integer scaled = q.get_num();
  scaled <<= bits;
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), scaled.get_mpz_t(), q.get_den_mpz_t());
  Integer den = 1;
  den <<= bits;
  Rational r(fl, den);
  r.canonicalize();
  return r;
}

Rational round_up(const Rational& q, unsigned bits) {
  Integer scaled = q.get_num();
  scaled <<= bits;
  Integer cl;
  mpz_cdiv_q(cl.get_mpz_t(), scaled.get_mpz_t(), q.get_den_mpz_t());
  Integer den = 1;
  den <<= bits;
  Rational r(cl, den);
  r.canonicalize();
  return r;
}

}  // namespace einso
