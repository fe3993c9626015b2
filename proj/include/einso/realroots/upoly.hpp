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

#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "einso/exact/rational.hpp"

namespace einso::realroots {

/// Dense univariate polynomial over Q, lowest degree first. Normalized
/// polynomials carry no trailing zeros; the zero polynomial is empty.
using UPoly = std::vector<Rational>;

UPoly trimmed(UPoly p);
/// -1 for the zero polynomial.
int degree(const UPoly& p);
inline bool is_zero(const UPoly& p) { return trimmed(p).empty(); }
Rational leading_coeff(const UPoly& p);

UPoly add(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly scale(const UPoly& a, const Rational& c);
UPoly derivative(const UPoly& p);
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly rem(const UPoly& a, const UPoly& b);
UPoly monic(const UPoly& p);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
/// p / gcd(p, p'), keeping the leading coefficient of p.
UPoly squarefree(const UPoly& p);
/// Positive rational multiple of p with coprime integer coefficients.
UPoly primitive(const UPoly& p);
/// p(q(x)) mod m (m nonzero), or plain composition when m is empty.
UPoly compose_mod(const UPoly& p, const UPoly& q, const UPoly& m);
UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& m);

Rational evaluate(const UPoly& p, const Rational& x);
int sign_at(const UPoly& p, const Rational& x);
/// Sign of p on (x, x + eps) for all small eps > 0.
int sign_right(const UPoly& p, const Rational& x);
/// Sign of p on (-inf) side / (+inf) side.
int sign_at_pos_infinity(const UPoly& p);
int sign_at_neg_infinity(const UPoly& p);

/// Number of sign changes in the coefficient sequence.
int descartes_variations(const UPoly& p);
/// Every real root r satisfies |r| < bound.
Rational cauchy_bound(const UPoly& p);

std::string to_string(const UPoly& p, const std::string& var = "x");

/// Closed rational interval, used for certified evaluation.
struct Interval {
  Rational lo;
  Rational hi;

  static Interval point(const Rational& x) { return {x, x}; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  bool overlaps(const Interval& o) const { return !(hi < o.lo || o.hi < lo); }
  bool is_point() const { return lo == hi; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Rational& c);
/// Requires 0 outside b.
Interval operator/(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);
/// Rounds endpoints outward to multiples of 2^-bits.
Interval widen_to_dyadic(const Interval& a, unsigned bits);

/// Horner evaluation over an interval; `bits` > 0 rounds outward at each step.
Interval evaluate(const UPoly& p, const Interval& x, unsigned bits = 0);

}  // namespace einso::realroots
