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

#include "einso/groebner/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace einso::groebner {

namespace {

std::mutex& write_mutex() {
  static std::mutex m;
  return m;
}

nlohmann::json header(const Ideal& ideal) {
  nlohmann::json j;
  j["ring"] = ideal.ring->names();
  j["order"] = order_to_string(*ideal.ring, ideal.order);
  auto gens = nlohmann::json::array();
  for (const auto& g : ideal.generators) gens.push_back(g.to_string());
  j["generators"] = gens;
  return j;
}

}  // namespace

BasisCache::BasisCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path BasisCache::resolve_dir(const std::filesystem::path& fallback) {
  if (const char* env = std::getenv("EINSTEIN_SO_CACHE"); env && *env) return env;
  return fallback;
}

std::optional<GroebnerBasis> BasisCache::load(const Ideal& ideal) const {
  auto path = dir_ / (ideal_key(ideal) + ".json");
  std::ifstream in(path);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
    auto h = header(ideal);
    if (j.at("ring") != h["ring"] || j.at("order") != h["order"] ||
        j.at("generators") != h["generators"])
      return std::nullopt;
    GroebnerBasis b;
    b.ring = ideal.ring;
    b.order = ideal.order;
    b.reduced = true;
    for (const auto& s : j.at("basis")) b.polynomials.push_back(parse_poly(s.get<std::string>(), ideal.ring));
    const auto& st = j.at("stats");
    b.stats.pairs = st.at("pairs").get<std::uint64_t>();
    b.stats.reductions = st.at("reductions").get<std::uint64_t>();
    b.stats.seconds = st.at("seconds").get<double>();
    return b;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void BasisCache::store(const Ideal& ideal, const GroebnerBasis& basis) const {
  auto j = header(ideal);
  auto polys = nlohmann::json::array();
  for (const auto& p : basis.polynomials) polys.push_back(p.to_string());
  j["basis"] = polys;
  j["stats"] = {{"pairs", basis.stats.pairs},
                {"reductions", basis.stats.reductions},
                {"seconds", basis.stats.seconds}};
  std::lock_guard lock(write_mutex());
  std::filesystem::create_directories(dir_);
  auto key = ideal_key(ideal);
  std::ostringstream tmp_name;
  tmp_name << key << ".tmp." << std::this_thread::get_id();
  auto tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp);
    out << j.dump(1) << "\n";
  }
  std::filesystem::rename(tmp, dir_ / (key + ".json"));
}

GroebnerBasis cached_buchberger(const Ideal& ideal, const Budget& budget, const BasisCache* cache) {
  if (cache) {
    if (auto hit = cache->load(ideal)) return *hit;
  }
  auto basis = buchberger(ideal, budget);
  if (cache) cache->store(ideal, basis);
  return basis;
}

}  // namespace einso::groebner
