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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "einso/exact/multipoly.hpp"

namespace einso::groebner {

/// Limits for one basis computation. Exceeding either throws BudgetExceeded.
struct Budget {
  std::uint64_t max_reductions = 1'000'000;
  std::size_t max_bytes = std::size_t{512} << 20;
  /// Coefficient arithmetic, in products of 64-bit limbs; 0 means no limit.
  /// Step counts alone do not bound time once coefficients reach megabits.
  std::uint64_t max_work = 100'000'000'000;
};

struct GroebnerStats {
  std::uint64_t pairs = 0;
  std::uint64_t pairs_pruned = 0;
  std::uint64_t reductions = 0;
  std::uint64_t work = 0;
  double seconds = 0.0;
};

struct Ideal {
  Ideal(RingPtr ring, std::vector<MultiPoly> generators, MonomialOrder order);

  RingPtr ring;
  std::vector<MultiPoly> generators;
  MonomialOrder order;
};

/// Basis elements are primitive integer polynomials with positive leading
/// coefficient, sorted by ascending leading monomial.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<MultiPoly> polynomials;
  MonomialOrder order;
  bool reduced = false;
  GroebnerStats stats;

  bool is_unit() const;
};

/// Full reduction over Q; the remainder has no term divisible by a leading
/// monomial of `basis`.
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                      const MonomialOrder& order);

/// lc(g) * (L/lm(f)) * f - lc(f) * (L/lm(g)) * g with L = lcm(lm f, lm g),
/// scaled by 1 / (lc f * lc g) so that leading coefficients play no role.
MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& order);

/// Reduced basis by Buchberger's algorithm in the ideal's own order.
GroebnerBasis buchberger(const Ideal& ideal, const Budget& budget = {});

/// Reduced basis of the same ideal in another order: a grevlex basis over the
/// lex precedence, then conversion by linear algebra in the quotient. The
/// ideal's order must be lex and the ideal zero-dimensional.
GroebnerBasis two_stage(const Ideal& ideal, const Budget& budget = {});

/// Converts a reduced basis of a zero-dimensional ideal to `target`.
GroebnerBasis change_order(const GroebnerBasis& basis, const MonomialOrder& target);

/// Extends the ring by `fresh` and appends fresh * prod(vars) - 1.
Ideal saturate(const Ideal& ideal, std::span<const std::string> vars_nonzero,
               const std::string& fresh = "z");
/// Same with arbitrary nonzero polynomials in place of variables.
Ideal saturate_by(const Ideal& ideal, std::span<const MultiPoly> nonzero,
                  const std::string& fresh = "z");

/// Basis members involving only `keep`. The basis order must be lex with
/// every eliminated variable ahead of every kept one.
std::vector<MultiPoly> eliminate(const GroebnerBasis& basis, std::span<const std::string> keep);

/// Checks that every S-polynomial reduces to zero. With sample_limit > 0 only
/// that many pairs are checked, spread evenly.
bool is_groebner(const std::vector<MultiPoly>& polys, const MonomialOrder& order,
                 std::size_t sample_limit = 0);

bool is_zero_dimensional(const GroebnerBasis& basis);

/// Content hash of (ring, order, generators) used as cache key.
std::string ideal_key(const Ideal& ideal);

std::string order_to_string(const Ring& ring, const MonomialOrder& order);

}  // namespace einso::groebner
