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

// Runs the acceptance criteria and prints one line per criterion. Optional
// arguments select criteria by number.

#include <cstdio>
#include <iostream>
#include <string>

#include "einso/cli/verify.hpp"

int main(int argc, char** argv) {
  using namespace einso::cli;
  VerifyOptions options;
  for (int i = 1; i < argc; ++i) options.only.push_back(std::stoi(argv[i]));
  options.log = [](const std::string& line) { std::cerr << "  " << line << std::endl; };
  options.on_check = [](const Check& c) {
    std::string tag = c.status == CheckStatus::Pass ? "PASS" : c.status == CheckStatus::Fail ? "FAIL" : "SKIP";
    std::printf("[%s] %2d %s: %s (%.1f s)\n", tag.c_str(), c.id, c.name.c_str(), c.actual.c_str(), c.seconds);
    std::fflush(stdout);
  };
  auto report = verify_paper(default_config(), options);
  return report.passed() ? 0 : 1;
}
