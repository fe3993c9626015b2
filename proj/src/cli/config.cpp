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

#include "einso/cli/config.hpp"

#include <fstream>

#include "einso/exact/errors.hpp"
#include "einso/groebner/cache.hpp"

namespace einso::cli {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_count(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(value, &used);
    if (used != value.size() || v <= 0) throw std::invalid_argument(value);
    return static_cast<std::uint64_t>(v);
  } catch (const std::exception&) {
    throw StructuralError(key + " must be a positive integer, got '" + value + "'");
  }
}

Rational parse_tolerance(const std::string& value) {
  try {
    return parse_rational(value);
  } catch (const StructuralError&) {
  }
  try {
    std::size_t used = 0;
    double d = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return from_double(d);
  } catch (const std::exception&) {
    throw StructuralError("refinement_tolerance must be a rational or decimal, got '" + value + "'");
  }
}

}  // namespace

void apply_setting(Config& config, const std::string& key, const std::string& value) {
  if (key == "groebner_reductions") {
    config.groebner_reductions = parse_count(key, value);
  } else if (key == "groebner_work") {
    config.groebner_work = parse_count(key, value);
  } else if (key == "groebner_memory_mb") {
    config.groebner_bytes = static_cast<std::size_t>(parse_count(key, value)) << 20;
  } else if (key == "refinement_tolerance") {
    config.refinement_tolerance = parse_tolerance(value);
  } else if (key == "numeric_starts") {
    config.numeric_starts = static_cast<int>(parse_count(key, value));
  } else if (key == "cache_dir") {
    config.cache_dir = value;
  } else if (key == "cache") {
    if (value != "on" && value != "off") throw StructuralError("cache must be on or off");
    config.use_cache = value == "on";
  } else if (key == "output_format") {
    if (value == "json") config.output_format = OutputFormat::Json;
    else if (value == "text") config.output_format = OutputFormat::Text;
    else throw StructuralError("output_format must be json or text");
  } else if (key == "threads") {
    config.threads = value == "0" ? 0 : static_cast<unsigned>(parse_count(key, value));
  } else {
    throw StructuralError("unknown config key '" + key + "'");
  }
}

Config default_config() {
  Config c;
  c.cache_dir = groebner::BasisCache::resolve_dir(c.cache_dir);
  return c;
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot read config file " + path.string());
  Config c;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw StructuralError(path.string() + ":" + std::to_string(lineno) + ": expected key = value");
    apply_setting(c, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  c.cache_dir = groebner::BasisCache::resolve_dir(c.cache_dir);
  validate(c);
  return c;
}

void validate(const Config& config) {
  if (config.groebner_reductions == 0 || config.groebner_bytes == 0 || config.groebner_work == 0 ||
      config.numeric_starts <= 0 || config.refinement_tolerance <= 0)
    throw StructuralError("config limits must be positive");
}

einstein::PipelineOptions pipeline_options(const Config& config) {
  einstein::PipelineOptions opt;
  opt.exact.budget.max_reductions = config.groebner_reductions;
  opt.exact.budget.max_bytes = config.groebner_bytes;
  opt.exact.budget.max_work = config.groebner_work;
  opt.exact.width = config.refinement_tolerance;
  opt.numeric.starts = config.numeric_starts;
  if (config.use_cache) opt.exact.cache = std::make_shared<groebner::BasisCache>(config.cache_dir);
  return opt;
}

}  // namespace einso::cli
