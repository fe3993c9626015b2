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

// Internal polynomial representation for basis computations. Exponents are
// permuted so that internal variable 0 is the largest; comparisons then need
// no precedence lookup.

#include <cstddef>
#include <vector>

#include "einso/exact/multipoly.hpp"
#include "einso/groebner/groebner.hpp"

namespace einso::groebner::detail {

struct Order {
  OrderKind kind = OrderKind::Lex;
  std::size_t nvars = 0;

  int cmp(const Monomial& a, const Monomial& b) const {
    if (kind == OrderKind::GrevLex) {
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      for (std::size_t k = nvars; k-- > 0;) {
        if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
      }
      return 0;
    }
    for (std::size_t k = 0; k < nvars; ++k) {
      if (a[k] != b[k]) return a[k] > b[k] ? 1 : -1;
    }
    return 0;
  }
};

template <class C>
struct Term {
  Monomial m;
  C c;
};

/// Terms sorted descending; no zero coefficients.
template <class C>
using Poly = std::vector<Term<C>>;

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

/// Maps between ring coordinates and internal coordinates for one order.
class Frame {
 public:
  Frame(RingPtr ring, const MonomialOrder& order);

  const Order& order() const { return order_; }
  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& ring_order() const { return ring_order_; }

  Monomial to_internal(const Monomial& m) const;
  Monomial to_ring(const Monomial& m) const;

  /// Primitive integer form with positive leading coefficient.
  IntPoly to_int(const MultiPoly& p) const;
  RatPoly to_rat(const MultiPoly& p) const;
  MultiPoly from_int(const IntPoly& p) const;
  MultiPoly from_rat(const RatPoly& p) const;

 private:
  RingPtr ring_;
  MonomialOrder ring_order_;
  Order order_;
};

/// Tracks reduction steps and stored bytes against a Budget.
class BudgetTracker {
 public:
  explicit BudgetTracker(const Budget& b) : budget_(b) {}

  void step();
  void work(std::uint64_t units);
  void store(std::size_t bytes);
  void check_transient(std::size_t bytes) const;
  std::uint64_t reductions() const { return reductions_; }
  std::uint64_t work() const { return work_; }

 private:
  Budget budget_;
  std::uint64_t reductions_ = 0;
  std::uint64_t work_ = 0;
  std::size_t stored_ = 0;
};

std::size_t byte_size(const IntPoly& p);
/// Total limbs of the coefficients of p[from..].
std::uint64_t limb_count(const IntPoly& p, std::size_t from = 0);

/// Divides by the gcd of all coefficients and makes the leading one positive.
void make_primitive(IntPoly& p);
void make_monic(RatPoly& p);

/// Full fraction-free reduction; result is primitive (or empty).
IntPoly reduce_int(IntPoly p, const std::vector<const IntPoly*>& divisors, const Order& ord,
                   BudgetTracker* budget);

/// Full reduction over Q by monic divisors.
RatPoly reduce_rat(RatPoly p, const std::vector<const RatPoly*>& divisors, const Order& ord);

/// Integer S-polynomial (leading terms cancel exactly), not normalized.
IntPoly spoly_int(const IntPoly& f, const IntPoly& g, const Order& ord);

/// Reduced basis of the integer generators under ord. Throws BudgetExceeded.
std::vector<IntPoly> buchberger_core(std::vector<IntPoly> gens, const Order& ord,
                                     BudgetTracker& budget, GroebnerStats& stats);

}  // namespace einso::groebner::detail
