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
#include <string>
#include <vector>

#include "einso/exact/multipoly.hpp"
#include "einso/liealg/liealg.hpp"

namespace einso::ricci {

/// numerator / denominator with a monomial denominator.
class RationalFunction {
 public:
  explicit RationalFunction(RingPtr ring);
  RationalFunction(MultiPoly numerator, Monomial denominator);

  /// c * prod x_v^e_v with possibly negative exponents, variables by name.
  static RationalFunction laurent(RingPtr ring, const Rational& c,
                                  const std::map<std::string, int>& exps);

  const MultiPoly& numerator() const { return num_; }
  const Monomial& denominator() const { return den_; }
  MultiPoly denominator_poly() const;
  const RingPtr& ring_ptr() const { return num_.ring_ptr(); }

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const Rational& c);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const Rational& c) { return a *= c; }
  friend RationalFunction operator*(const Rational& c, RationalFunction a) { return a *= c; }

  /// Equality as rational functions.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  Rational evaluate(const std::map<std::string, Rational>& point) const;
  /// Applies a substitution to the numerator and denominator separately;
  /// returns (numerator, denominator) polynomials over `target`.
  std::pair<MultiPoly, MultiPoly> substitute(const std::map<std::string, MultiPoly>& bindings,
                                             RingPtr target) const;
  std::string to_string() const;

 private:
  void normalize();

  MultiPoly num_;
  Monomial den_;
};

/// Metric variables of the diagonal ansatz: x_i for each block of size >= 2,
/// and x12, x13, x23.
std::vector<std::string> metric_variables(const liealg::Decomposition& d);
RingPtr metric_ring(const liealg::Decomposition& d);

struct RicciSystem {
  liealg::Decomposition decomposition;
  RingPtr ring;
  std::map<liealg::Module, RationalFunction> components;

  std::map<liealg::Module, Rational> evaluate(const std::map<std::string, Rational>& metric) const;
};

RicciSystem ricci_generic(const liealg::Decomposition& d, const liealg::TripletTable& t);
RicciSystem ricci_closed_form(const liealg::Decomposition& d);

/// r(e_x, e_y) of the diagonal metric from the polarized Ricci formula, in the
/// unnormalized e_ab basis. Exact.
Rational ricci_bilinear(const liealg::Decomposition& d,
                        const std::map<std::string, Rational>& metric,
                        const liealg::BasisElement& x, const liealg::BasisElement& y);

/// r(c g) = r(g) / c for every component, checked symbolically in a fresh
/// variable c.
bool scaling_law_holds(const RicciSystem& sys);

/// max |r(X, Y)| over basis pairs X in m12, Y in m13 for the (n-2,1,1) metric.
Rational ricci_offdiag_check(int n, const std::map<std::string, Rational>& metric);

}  // namespace einso::ricci
