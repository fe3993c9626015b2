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
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "einso/groebner/groebner.hpp"
#include "einso/realroots/upoly.hpp"

namespace einso::groebner {

using Vector = std::vector<Rational>;

/// Incremental row echelon form that remembers how each row was built from
/// the inserted vectors.
class Echelon {
 public:
  explicit Echelon(std::size_t dim) : dim_(dim) {}

  /// If v lies in the span of the vectors inserted so far, returns c with
  /// v = sum c[k] * inserted[k]. Otherwise inserts v and returns nullopt.
  std::optional<Vector> insert_or_express(Vector v);
  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    std::size_t pivot;
    Vector v;
    Vector t;
  };
  std::size_t dim_;
  std::vector<Row> rows_;
};

/// The finite-dimensional algebra Q[x]/I for a zero-dimensional ideal given by
/// a reduced basis in any order. Elements are coordinate vectors over the
/// standard monomials.
class Quotient {
 public:
  explicit Quotient(const GroebnerBasis& basis);

  std::size_t dimension() const { return standard_.size(); }
  const RingPtr& ring() const { return ring_; }
  const std::vector<Monomial>& standard_monomials() const { return standard_; }

  Vector one() const;
  Vector coordinates(const MultiPoly& p) const;
  MultiPoly from_coordinates(std::span<const Rational> v) const;

  Vector multiply_by_variable(std::size_t var, std::span<const Rational> v) const;
  Vector multiply(const MultiPoly& f, std::span<const Rational> v) const;

  /// Monic minimal polynomial of f in the algebra.
  realroots::UPoly minimal_polynomial(const MultiPoly& f) const;

  /// c with target = sum c[k] f^k in the algebra, when such c exists with
  /// k below the degree of the minimal polynomial of f.
  std::optional<realroots::UPoly> express_in_powers(const MultiPoly& f,
                                                    const MultiPoly& target) const;
  /// express_in_powers for several targets sharing one Krylov basis.
  std::optional<std::vector<realroots::UPoly>> express_in_powers(
      const MultiPoly& f, std::span<const MultiPoly> targets) const;

 private:
  using SparseColumn = std::vector<std::pair<std::size_t, Rational>>;

  RingPtr ring_;
  GroebnerBasis basis_;
  std::vector<Monomial> standard_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
  // matrices_[var][j] = coordinates of x_var * standard_[j]
  std::vector<std::vector<SparseColumn>> matrices_;
};

}  // namespace einso::groebner
