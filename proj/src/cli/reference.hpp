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
#include <vector>

#include "einso/realroots/upoly.hpp"

namespace einso::cli::reference {

using realroots::UPoly;

/// Eliminant of the (3,3,1) system in x13 as a product of printed factors.
UPoly eliminant_331();
/// Eliminant of the (4,3,1) system in x13.
UPoly eliminant_431();
/// Degree-8 eliminant in x23 of the (n-6,3,3) slice x12 = x13 = 1, x2 = x3.
UPoly slice_eliminant(int n);

struct ScaledMetric {
  double x1, x2, x12, x23, x13;
};

struct TableRow {
  std::array<int, 3> k;
  int non_nr;
  int nr;
};

const std::vector<ScaledMetric>& non_nr_331();
const std::vector<ScaledMetric>& non_nr_431();
const std::vector<TableRow>& table();

}  // namespace einso::cli::reference
