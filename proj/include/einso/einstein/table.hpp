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

#include <string>
#include <vector>

#include "einso/einstein/analysis.hpp"

namespace einso::einstein {

enum class CellStatus { Exact, NumericOnly, BudgetExceeded, Failed };
std::string to_string(CellStatus s);

struct TableCell {
  explicit TableCell(const liealg::Decomposition& d) : decomposition(d) {}

  liealg::Decomposition decomposition;
  int non_nr = 0;
  int nr = 0;
  int undecided = 0;
  CellStatus status = CellStatus::Exact;
  /// Every numeric record passed the Krawczyk test.
  bool certified = true;
  std::string error;
  double seconds = 0.0;
};

/// k1 >= k2 >= k3 >= 1 with k1 + k2 + k3 = n, ordered by descending k.
std::vector<liealg::Decomposition> partitions(int n);

/// Counts non-NR / NR isometry classes for every partition of every n in
/// [n_min, n_max]. Cells run on up to `threads` workers (0: hardware
/// concurrency); results come back in partition order.
std::vector<TableCell> count_table(int n_min, int n_max, const PipelineOptions& opt = {},
                                   unsigned threads = 0);

TableCell count_cell(const liealg::Decomposition& d, const PipelineOptions& opt = {});

}  // namespace einso::einstein
