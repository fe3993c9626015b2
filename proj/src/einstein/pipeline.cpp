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

#include "einso/einstein/analysis.hpp"
#include "einso/exact/errors.hpp"

namespace einso::einstein {

namespace {

bool contains_point(const SolutionRecord& box, const SolutionRecord& exact) {
  for (std::size_t i = 0; i < box.coords.size(); ++i)
    if (!box.coords[i].overlaps(exact.coords[i])) return false;
  return true;
}

}  // namespace

PipelineResult run_pipeline(const EinsteinSystem& sys, const PipelineOptions& opt) {
  PipelineResult out;
  std::vector<SolutionRecord> raw;
  bool have_exact = false;
  if (opt.method != Method::Numeric) {
    try {
      out.exact = solve_exact(sys, opt.exact);
      raw = out.exact->solutions;
      have_exact = true;
    } catch (const BudgetExceeded&) {
      out.budget_exceeded = true;
      if (!opt.fallback && opt.method == Method::Exact) throw;
    }
  }
  if (!have_exact || opt.method == Method::Both) {
    auto numeric = solve_numeric(sys, opt.numeric);
    if (have_exact) {
      for (const auto& rec : numeric) {
        bool matched = false;
        for (const auto& e : raw) matched = matched || contains_point(rec, e);
        if (!matched) ++out.numeric_unmatched;
      }
    } else {
      raw = std::move(numeric);
    }
  }
  out.status = have_exact ? Status::Exact : Status::NumericOnly;
  out.certified = true;
  for (auto& rec : raw) {
    rec = scale_to_unit(std::move(rec), sys.ricci);
    rec.classification = classify(rec, sys.decomposition);
    out.certified = out.certified && (rec.status == Status::Exact || rec.certified);
  }
  out.classes = dedup_isometry(raw, sys.decomposition);
  out.solutions = std::move(raw);
  return out;
}

}  // namespace einso::einstein
