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

#include <vector>

#include "einso/realroots/upoly.hpp"

namespace einso::realroots {

/// Canonical Sturm chain of the square-free part of p:
/// s0 = sqfree(p), s1 = s0', s(k+1) = -rem(s(k-1), s(k)).
std::vector<UPoly> sturm_sequence(const UPoly& p);

/// Precomputed chain with sign-equivalent integer forms for fast evaluation.
class SturmChain {
 public:
  explicit SturmChain(const UPoly& p);

  const std::vector<UPoly>& chain() const { return chain_; }
  const UPoly& squarefree_part() const { return chain_.front(); }

  /// Sign variations at x, zeros skipped.
  int variations_at(const Rational& x) const;
  /// Sign variations just right of x.
  int variations_right_of(const Rational& x) const;
  int variations_at_pos_infinity() const;
  int variations_at_neg_infinity() const;

  /// Distinct real roots in (a, b]; a < b required.
  int count(const Rational& a, const Rational& b) const;

 private:
  std::vector<UPoly> chain_;
  std::vector<UPoly> scaled_;
};

/// Distinct real roots of p in the half-open interval (a, b].
int count_roots(const UPoly& p, const Rational& a, const Rational& b);

/// Contains exactly one root of the defining polynomial in (low, high],
/// or exactly the root low when low == high.
struct IsolatingInterval {
  Rational low;
  Rational high;

  bool is_exact() const { return low == high; }
  Interval as_interval() const { return {low, high}; }
};

/// Isolating intervals for all distinct positive roots, ascending.
std::vector<IsolatingInterval> isolate_positive_roots(const UPoly& p);

/// Isolating intervals for all distinct real roots in (a, b], ascending.
std::vector<IsolatingInterval> isolate_roots(const UPoly& p, const Rational& a, const Rational& b);

/// Isolating intervals for all distinct real roots, ascending.
std::vector<IsolatingInterval> isolate_real_roots(const UPoly& p);

/// Shrinks iv by bisection until high - low <= tol (or the root is hit).
IsolatingInterval refine(const UPoly& p, IsolatingInterval iv, const Rational& tol);
/// refine for a square-free p, preferably primitive.
IsolatingInterval refine_squarefree(const UPoly& p, IsolatingInterval iv, const Rational& tol);

/// The rational root inside iv when there is one.
bool rational_root_in(const UPoly& p, const IsolatingInterval& iv, Rational& out);

}  // namespace einso::realroots
