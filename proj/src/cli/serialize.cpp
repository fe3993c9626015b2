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

#include "einso/cli/serialize.hpp"

namespace einso::cli {

using einstein::SolutionRecord;

json interval_to_json(const realroots::Interval& iv) {
  return {{"lo", to_string(iv.lo)}, {"hi", to_string(iv.hi)}, {"approx", to_double(iv.midpoint())}};
}

realroots::Interval interval_from_json(const json& j) {
  return {parse_rational(j.at("lo").get<std::string>()), parse_rational(j.at("hi").get<std::string>())};
}

json triplets_to_json(const liealg::TripletTable& t) {
  json entries = json::array();
  for (const auto& e : t.entries()) {
    json triple = json::array();
    for (auto m : e.triple) triple.push_back(std::string(liealg::label(m)));
    entries.push_back({{"triple", triple}, {"value", to_string(e.value)}});
  }
  return {{"k", t.decomposition().ks()}, {"entries", entries}};
}

json ricci_to_json(const ricci::RicciSystem& sys, const std::map<std::string, Rational>* metric) {
  json comps = json::object();
  if (metric) {
    for (const auto& [m, v] : sys.evaluate(*metric))
      comps[std::string(liealg::label(m))] = {{"value", to_string(v)}, {"approx", to_double(v)}};
  } else {
    for (const auto& [m, r] : sys.components) comps[std::string(liealg::label(m))] = r.to_string();
  }
  return {{"k", sys.decomposition.ks()}, {"variables", sys.ring->names()}, {"components", comps}};
}

json record_to_json(const SolutionRecord& rec) {
  json coords = json::object(), scaled = json::object();
  for (std::size_t i = 0; i < rec.variables.size(); ++i) {
    coords[rec.variables[i]] = interval_to_json(rec.coords[i]);
    if (i < rec.scaled.size()) scaled[rec.variables[i]] = interval_to_json(rec.scaled[i]);
  }
  const auto& lambda = rec.einstein_constant;
  json cls = {{"kind", einstein::to_string(rec.classification.kind)},
              {"case", rec.classification.case_id ? json(*rec.classification.case_id) : json(nullptr)},
              {"subgroup", rec.classification.subgroup ? json(*rec.classification.subgroup) : json(nullptr)}};
  return {{"k", rec.k},
          {"coords", coords},
          {"scaled", scaled},
          {"einstein_constant", lambda.is_point() ? to_string(lambda.lo)
                                                  : "[" + to_string(lambda.lo) + ", " + to_string(lambda.hi) + "]"},
          {"einstein_constant_approx", to_double(lambda.midpoint())},
          {"class", cls},
          {"isometry_class", rec.isometry_class},
          {"status", einstein::to_string(rec.status)},
          {"certified", rec.status == einstein::Status::Exact || rec.certified}};
}

json pipeline_to_json(const einstein::EinsteinSystem& sys, const einstein::PipelineResult& res) {
  const auto& d = sys.decomposition;
  json out;
  out["k"] = d.ks();
  out["unknowns"] = sys.ring->names();
  json polys = json::array();
  for (const auto& p : sys.polynomials) polys.push_back(p.to_string());
  out["system"] = polys;
  out["status"] = einstein::to_string(res.status);
  out["certified"] = res.certified;
  out["budget_exceeded"] = res.budget_exceeded;
  if (res.exact) {
    out["eliminant"] = {{"variable", res.exact->eliminant_variable},
                        {"degree", realroots::degree(res.exact->eliminant)},
                        {"polynomial", realroots::to_string(realroots::primitive(res.exact->eliminant),
                                                            res.exact->eliminant_variable)}};
    out["quotient_dimension"] = res.exact->quotient_dimension;
  }
  json sols = json::array();
  for (const auto& r : res.solutions) sols.push_back(record_to_json(r));
  out["solutions"] = sols;
  json classes = json::array();
  int nr = 0, non_nr = 0, undecided = 0;
  for (const auto& r : res.classes) {
    classes.push_back(record_to_json(r));
    switch (r.classification.kind) {
      case einstein::Kind::NaturallyReductive: ++nr; break;
      case einstein::Kind::NonNaturallyReductive: ++non_nr; break;
      case einstein::Kind::Undecided: ++undecided; break;
    }
  }
  out["classes"] = classes;
  out["counts"] = {{"non_nr", non_nr}, {"nr", nr}, {"undecided", undecided}};
  if (res.numeric_unmatched) out["numeric_unmatched"] = res.numeric_unmatched;
  return out;
}

json cell_to_json(const einstein::TableCell& cell) {
  json j = {{"k", cell.decomposition.ks()},
            {"n", cell.decomposition.n()},
            {"non_nr", cell.non_nr},
            {"nr", cell.nr},
            {"undecided", cell.undecided},
            {"status", einstein::to_string(cell.status)},
            {"certified", cell.certified}};
  if (!cell.error.empty()) j["error"] = cell.error;
  return j;
}

}  // namespace einso::cli
