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
#include <filesystem>
#include <string>

#include "einso/einstein/analysis.hpp"
#include "einso/exact/rational.hpp"

namespace einso::cli {

enum class OutputFormat { Json, Text };

struct Config {
  std::uint64_t groebner_reductions = 1'000'000;
  std::size_t groebner_bytes = std::size_t{512} << 20;
  std::uint64_t groebner_work = 100'000'000'000;
  Rational refinement_tolerance = Rational(1, 1000000000);
  int numeric_starts = 2000;
  std::filesystem::path cache_dir = ".einso-cache";
  bool use_cache = true;
  OutputFormat output_format = OutputFormat::Json;
  /// Workers for table and verify-paper; 0 means one per hardware thread.
  unsigned threads = 0;
};

/// Applies one "key = value" setting. Unknown keys and bad values throw
/// StructuralError.
void apply_setting(Config& config, const std::string& key, const std::string& value);

/// Reads a key=value file; blank lines and lines starting with '#' are
/// skipped. EINSTEIN_SO_CACHE overrides cache_dir afterwards.
Config load_config(const std::filesystem::path& path);

/// Default config with the environment override applied.
Config default_config();

/// Throws StructuralError unless every limit is positive.
void validate(const Config& config);

einstein::PipelineOptions pipeline_options(const Config& config);

}  // namespace einso::cli
