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

#include "einso/einstein/table.hpp"
#include "einso/liealg/liealg.hpp"
#include "einso/ricci/ricci.hpp"
#include "json.hpp"

namespace einso::cli {

using nlohmann::json;

/// {"lo": "p/q", "hi": "p/q", "approx": float}
json interval_to_json(const realroots::Interval& iv);
realroots::Interval interval_from_json(const json& j);

/// {"k": [..], "entries": [{"triple": ["m1", "m1", "m1"], "value": "p/q"}, ...]}
json triplets_to_json(const liealg::TripletTable& t);
/// Components as text, or as exact values when a metric is given.
json ricci_to_json(const ricci::RicciSystem& sys, const std::map<std::string, Rational>* metric = nullptr);

json record_to_json(const einstein::SolutionRecord& rec);
json pipeline_to_json(const einstein::EinsteinSystem& sys, const einstein::PipelineResult& res);
json cell_to_json(const einstein::TableCell& cell);

}  // namespace einso::cli
