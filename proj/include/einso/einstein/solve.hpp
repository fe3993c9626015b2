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

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "einso/einstein/solution.hpp"
#include "einso/einstein/system.hpp"
#include "einso/groebner/cache.hpp"
#include "einso/groebner/groebner.hpp"

namespace einso::einstein {

struct ExactOptions {
  groebner::Budget budget;
  /// Extra polynomials (text over the unknowns) required to be nonzero.
  std::vector<std::string> nonzero;
  /// Convert the basis to lex and read the eliminant from it.
  bool lex_basis = true;
  /// Width of the reported coordinate enclosures.
  Rational width = Rational(1, 1000000) * Rational(1, 1000000);
  /// Optional on-disk basis cache shared between runs.
  std::shared_ptr<const groebner::BasisCache> cache;
};

struct ExactResult {
  /// Graded basis of the saturated ideal.
  groebner::GroebnerBasis basis;
  /// Lex basis of the saturated ideal, when requested.
  std::optional<groebner::GroebnerBasis> lex;
  /// Generator of the elimination ideal in the last precedence variable.
  UPoly eliminant;
  std::string eliminant_variable;
  std::size_t quotient_dimension = 0;
  std::size_t radical_dimension = 0;
  groebner::GroebnerStats stats;
  /// Positive solutions, unscaled and unclassified.
  std::vector<SolutionRecord> solutions;
};

/// Saturates away the coordinate hyperplanes, computes a basis, and reads
/// every positive real solution off a rational univariate representation of
/// the radical. Throws BudgetExceeded (use solve_numeric instead) and
/// DomainError for positive-dimensional solution sets.
ExactResult solve_exact(const EinsteinSystem& sys, const ExactOptions& opt = {});

struct NumericOptions {
  int starts = 2000;
  std::uint64_t seed = 20260101;
  /// Relative distance under which converged points are merged.
  double cluster_tol = 1e-7;
  int max_iterations = 100;
};

/// Damped Newton from log-uniform positive starts in [1e-2, 1e2]; clusters
/// are certified by the Krawczyk test on a small rational box and tightened
/// to the tolerance floor, otherwise returned as numeric-only.
std::vector<SolutionRecord> solve_numeric(const EinsteinSystem& sys, const NumericOptions& opt = {});

}  // namespace einso::einstein
