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

#include <functional>
#include <string>
#include <vector>

#include "einso/cli/config.hpp"
#include "json.hpp"

namespace einso::cli {

enum class CheckStatus { Pass, Fail, SkippedBudget };
std::string to_string(CheckStatus s);
CheckStatus check_status_from_string(const std::string& s);

struct Check {
  int id = 0;
  std::string name;
  /// What is expected, and where the expected value comes from.
  std::string expected;
  std::string source;
  std::string actual;
  CheckStatus status = CheckStatus::Fail;
  double seconds = 0.0;
};

struct VerificationReport {
  std::vector<Check> checks;

  /// No check failed; budget skips do not count as failures.
  bool passed() const;
  nlohmann::json to_json() const;
  static VerificationReport from_json(const nlohmann::json& j);
};

struct VerifyOptions {
  /// Criteria to run (1..10); empty runs all.
  std::vector<int> only;
  int table_n_min = 5;
  int table_n_max = 9;
  /// Called after each check completes.
  std::function<void(const Check&)> on_check;
  /// Progress lines, e.g. one per table cell.
  std::function<void(const std::string&)> log;
};

int criteria_count();

VerificationReport verify_paper(const Config& config, const VerifyOptions& options = {});

}  // namespace einso::cli
