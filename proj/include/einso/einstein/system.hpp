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
#include "einso/ricci/ricci.hpp"

namespace einso::einstein {

/// Which diagonal ansatz a decomposition uses.
enum class Ansatz { ThreeBlocks, TwoBlocks, OneBlock };

Ansatz ansatz_of(const liealg::Decomposition& d);

/// Bindings of metric variables to polynomials in the remaining unknowns,
/// e.g. {"x12": 1, "x3": x2}. Right-hand sides are kept as text until the
/// unknown ring is known.
using Specialization = std::map<std::string, std::string>;

/// Parses "var=expr".
std::pair<std::string, std::string> parse_binding(const std::string& text);

struct EinsteinSystem {
  liealg::Decomposition decomposition;
  ricci::RicciSystem ricci;
  /// Every metric variable, with its value as a polynomial over `ring`.
  std::map<std::string, MultiPoly> metric;
  /// Unknowns: the metric variables not fixed by normalization or bindings.
  RingPtr ring;
  std::vector<MultiPoly> polynomials;
  /// Lex precedence for elimination; the last entry carries the eliminant.
  std::vector<std::string> precedence;
  Specialization specialization;
};

/// Consecutive differences of the Ricci components, numerators cleared of
/// monomial factors and made primitive. Without bindings x23 is set to 1;
/// bindings that fix a variable to a constant replace that normalization.
/// Differences that vanish identically are dropped.
EinsteinSystem build_system(const liealg::Decomposition& d, const Specialization& spec = {});

/// Metric values at a point given in the unknowns.
std::map<std::string, Rational> expand_point(const EinsteinSystem& sys,
                                             const std::map<std::string, Rational>& unknowns);

}  // namespace einso::einstein
