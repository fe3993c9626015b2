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

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "einso/exact/monomial.hpp"
#include "einso/exact/rational.hpp"

namespace einso {

/// Ordered list of variable names. Fixed at construction.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws StructuralError when the variable is absent.
  std::size_t require(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);

/// Lex order over the variables named in `precedence`, largest first.
MonomialOrder lex_order(const Ring& ring, std::span<const std::string> precedence);
MonomialOrder grevlex_order(const Ring& ring, std::span<const std::string> precedence);

/// Sparse polynomial over Q. Terms are kept sorted descending in the ring's
/// default lex order and carry no zero coefficients.
class MultiPoly {
 public:
  struct Term {
    Monomial monomial;
    Rational coeff;
  };

  explicit MultiPoly(RingPtr ring);

  static MultiPoly constant(RingPtr ring, const Rational& c);
  static MultiPoly variable(RingPtr ring, std::string_view name);
  static MultiPoly from_terms(RingPtr ring, std::vector<Term> terms);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;

  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  /// Indices of variables occurring with positive exponent.
  std::vector<std::size_t> variables() const;
  bool involves_only(std::span<const std::size_t> vars) const;

  const Term& leading_term(const MonomialOrder& order) const;
  /// Terms sorted descending in `order`.
  std::vector<Term> sorted_terms(const MonomialOrder& order) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly mul_term(const Monomial& m, const Rational& c) const;
  MultiPoly pow(unsigned e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  Rational evaluate(const std::map<std::string, Rational>& point) const;
  /// Point given by ring index.
  Rational evaluate(std::span<const Rational> point) const;

  /// Replaces bound variables by polynomials over `target`; unbound variables
  /// are carried over by name and must exist in `target`.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings, RingPtr target) const;
  /// Re-expresses the polynomial over another ring, matching variables by name.
  MultiPoly to_ring(RingPtr target) const;

  std::string to_string() const;
  std::string to_string(const MonomialOrder& order) const;

 private:
  void normalize();

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// p = content * primitive, primitive with coprime integer coefficients and
/// positive leading coefficient under `order`.
std::pair<Rational, MultiPoly> content_primitive(const MultiPoly& p, const MonomialOrder& order);
std::pair<Rational, MultiPoly> content_primitive(const MultiPoly& p);

/// Largest monomial dividing every term.
Monomial monomial_content(const MultiPoly& p);
MultiPoly divide_monomial(const MultiPoly& p, const Monomial& m);

/// Dense coefficients, lowest degree first. Throws if another variable occurs.
std::vector<Rational> to_univariate(const MultiPoly& p, std::string_view var);
MultiPoly from_univariate(RingPtr ring, std::string_view var, std::span<const Rational> coeffs);

/// Text format: rational coefficients, '^' powers, optional '*', parentheses.
MultiPoly parse_poly(std::string_view text, RingPtr ring);

/// True iff a = c*b for some nonzero rational c (both nonzero), or both zero.
bool equal_up_to_scalar(const MultiPoly& a, const MultiPoly& b);

}  // namespace einso
