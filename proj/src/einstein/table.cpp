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

#include "einso/einstein/table.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "einso/exact/errors.hpp"

namespace einso::einstein {

std::string to_string(CellStatus s) {
  switch (s) {
    case CellStatus::Exact: return "exact";
    case CellStatus::NumericOnly: return "numeric-only";
    case CellStatus::BudgetExceeded: return "budget-exceeded";
    case CellStatus::Failed: return "failed";
  }
  return "failed";
}

std::vector<liealg::Decomposition> partitions(int n) {
  std::vector<liealg::Decomposition> out;
  for (int k1 = n - 2; k1 >= 1; --k1)
    for (int k2 = std::min(k1, n - k1 - 1); k2 >= 1; --k2) {
      int k3 = n - k1 - k2;
      if (k3 >= 1 && k3 <= k2) out.emplace_back(k1, k2, k3);
    }
  return out;
}

TableCell count_cell(const liealg::Decomposition& d, const PipelineOptions& opt) {
  TableCell cell(d);
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto res = run_pipeline(build_system(d), opt);
    for (const auto& c : res.classes) {
      switch (c.classification.kind) {
        case Kind::NaturallyReductive: ++cell.nr; break;
        case Kind::NonNaturallyReductive: ++cell.non_nr; break;
        case Kind::Undecided: ++cell.undecided; break;
      }
    }
    cell.status = res.status == Status::Exact ? CellStatus::Exact : CellStatus::NumericOnly;
    cell.certified = res.certified;
  } catch (const BudgetExceeded& e) {
    cell.status = CellStatus::BudgetExceeded;
    cell.certified = false;
    cell.error = e.what();
  } catch (const std::exception& e) {
    cell.status = CellStatus::Failed;
    cell.certified = false;
    cell.error = e.what();
  }
  cell.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return cell;
}

std::vector<TableCell> count_table(int n_min, int n_max, const PipelineOptions& opt,
                                   unsigned threads) {
  if (n_min < 5 || n_max < n_min) throw StructuralError("count_table needs 5 <= n_min <= n_max");
  std::vector<liealg::Decomposition> cells;
  for (int n = n_min; n <= n_max; ++n)
    for (const auto& d : partitions(n)) cells.push_back(d);
  std::vector<TableCell> out;
  for (const auto& d : cells) out.emplace_back(d);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(cells.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) out[i] = count_cell(cells[i], opt);
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  return out;
}

}  // namespace einso::einstein
