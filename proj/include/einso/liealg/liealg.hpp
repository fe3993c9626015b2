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

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "einso/exact/rational.hpp"

namespace einso::liealg {

/// e_ab = E_ab - E_ba with 1 <= a < b <= n.
struct BasisElement {
  int a;
  int b;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// sign * element, or nothing for a zero bracket.
struct SignedElement {
  int sign;
  BasisElement element;
};

std::optional<SignedElement> bracket(const BasisElement& x, const BasisElement& y);

/// All e_ab of so(n) in lexicographic (a, b) order.
std::vector<BasisElement> so_basis(int n);

/// Antisymmetry and the Jacobi identity over every triple of basis elements.
bool bracket_identities_hold(int n);

enum class Module { m1 = 0, m2, m3, m12, m13, m23 };
inline constexpr std::array<Module, 6> kModules{Module::m1,  Module::m2,  Module::m3,
                                                Module::m12, Module::m13, Module::m23};

std::string_view label(Module m);
/// Accepts "m1".."m23".
Module parse_module(std::string_view s);
/// Metric variable attached to a module: "x1".."x23".
std::string variable_name(Module m);
bool is_diagonal_block(Module m);

/// n = k1 + k2 + k3 with k1 >= k2 >= k3 >= 1.
class Decomposition {
 public:
  Decomposition(int k1, int k2, int k3);

  int k(int i) const { return k_[static_cast<std::size_t>(i - 1)]; }
  int n() const { return k_[0] + k_[1] + k_[2]; }
  std::array<int, 3> ks() const { return k_; }

  /// Block 1, 2 or 3 of an index in 1..n.
  int block_of(int index) const;
  Module module_of(const BasisElement& e) const;
  int dim(Module m) const;
  std::vector<BasisElement> basis_of(Module m) const;
  /// Modules of positive dimension, in enumeration order.
  std::vector<Module> nonempty_modules() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  std::array<int, 3> k_;
};

/// Squared structure constants [k;ij] indexed by (k, i, j).
class TripletTable {
 public:
  struct Entry {
    std::array<Module, 3> triple;
    Rational value;
  };

  explicit TripletTable(const Decomposition& d) : d_(d) {}

  const Decomposition& decomposition() const { return d_; }
  const Rational& get(Module k, Module i, Module j) const;
  void set(Module k, Module i, Module j, const Rational& v);
  /// Sets all six index permutations.
  void set_symmetric(Module a, Module b, Module c, const Rational& v);

  /// Nonzero entries under sorted keys (each unordered triple once).
  std::vector<Entry> entries() const;
  bool is_symmetric() const;

  friend bool operator==(const TripletTable& a, const TripletTable& b) {
    return a.d_ == b.d_ && a.v_ == b.v_;
  }

 private:
  static std::size_t idx(Module k, Module i, Module j) {
    return static_cast<std::size_t>(k) * 36 + static_cast<std::size_t>(i) * 6 +
           static_cast<std::size_t>(j);
  }
  Decomposition d_;
  std::array<Rational, 216> v_{};
};

/// Counts nonzero ordered brackets of basis elements per module triple; each
/// contributes 1/(2(n-2)) in the (-B)-orthonormal normalization.
TripletTable triplets_bruteforce(const Decomposition& d);

/// The three closed forms in k1, k2, k3.
TripletTable triplets_closed_form(const Decomposition& d);

}  // namespace einso::liealg
