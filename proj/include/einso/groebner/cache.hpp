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

#include <filesystem>
#include <optional>

#include "einso/groebner/groebner.hpp"

namespace einso::groebner {

/// Reduced bases on disk, one JSON file per ideal_key. Writes go through a
/// temporary file and a rename, serialized by a process-wide mutex.
class BasisCache {
 public:
  explicit BasisCache(std::filesystem::path dir);

  /// $EINSTEIN_SO_CACHE if set, else `fallback`.
  static std::filesystem::path resolve_dir(const std::filesystem::path& fallback);

  const std::filesystem::path& dir() const { return dir_; }

  /// A stored basis whose ring, order and generators match the ideal exactly.
  std::optional<GroebnerBasis> load(const Ideal& ideal) const;
  void store(const Ideal& ideal, const GroebnerBasis& basis) const;

 private:
  std::filesystem::path dir_;
};

/// buchberger() with a cache lookup first; `cache` may be null.
GroebnerBasis cached_buchberger(const Ideal& ideal, const Budget& budget, const BasisCache* cache);

}  // namespace einso::groebner
