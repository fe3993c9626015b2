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

#include "einso/einstein/solution.hpp"
#include "einso/einstein/solve.hpp"
#include "einso/liealg/liealg.hpp"
#include "einso/ricci/ricci.hpp"

namespace einso::einstein {

/// Width to which scale_to_unit encloses coordinates.
Rational scaling_width();

/// Multiplies the metric by the common Ricci value so every component is 1.
/// Throws DomainError when the components are not equal at the point.
SolutionRecord scale_to_unit(SolutionRecord rec, const ricci::RicciSystem& sys);

/// One equality case of the naturally reductive characterization: groups of
/// metric variables that must agree.
struct ReductiveCase {
  int id;
  std::vector<std::vector<std::string>> groups;
  std::string subgroup;
};

/// Exact record for a metric with rational coefficients, scaled and
/// classified. Every metric variable must be given and positive; throws
/// DomainError when the metric is not Einstein.
SolutionRecord rational_record(const liealg::Decomposition& d,
                               const std::map<std::string, Rational>& metric);

/// Cases for the decomposition's ansatz, with the bi-invariant case 0 first.
std::vector<ReductiveCase> reductive_cases(const liealg::Decomposition& d);

/// Decides naturally reductive / not from exact relations at the witness.
/// Numeric boxes that cannot separate a case are settled, when possible, by
/// solving the system restricted to that case exactly.
Classification classify(const SolutionRecord& rec, const liealg::Decomposition& d);

/// Sets isometry_class on every record (records must be scaled) and returns
/// one representative per class, the lexicographically smallest scaled tuple,
/// ordered by that tuple.
std::vector<SolutionRecord> dedup_isometry(std::vector<SolutionRecord>& records,
                                           const liealg::Decomposition& d);

enum class Method { Exact, Numeric, Both };

struct PipelineOptions {
  Method method = Method::Exact;
  ExactOptions exact;
  NumericOptions numeric;
  /// Fall back to numeric solving when the exact budget runs out.
  bool fallback = true;
};

struct PipelineResult {
  std::vector<SolutionRecord> solutions;
  std::vector<SolutionRecord> classes;
  Status status = Status::Exact;
  bool certified = true;
  bool budget_exceeded = false;
  std::optional<ExactResult> exact;
  /// Numeric clusters with no exact counterpart (method both).
  std::size_t numeric_unmatched = 0;
};

/// solve, scale, classify and deduplicate one system.
PipelineResult run_pipeline(const EinsteinSystem& sys, const PipelineOptions& opt = {});

}  // namespace einso::einstein
