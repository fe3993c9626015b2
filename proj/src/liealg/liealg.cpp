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

#include "einso/liealg/liealg.hpp"

#include <algorithm>
#include <map>

#include "einso/exact/errors.hpp"

namespace einso::liealg {

namespace {

SignedElement oriented(int sign, int p, int q) {
  if (p < q) return {sign, {p, q}};
  return {-sign, {q, p}};
}

}  // namespace

std::optional<SignedElement> bracket(const BasisElement& x, const BasisElement& y) {
  // [e_ab, e_cd] = d_bc e_ad + d_ad e_bc - d_bd e_ac - d_ac e_bd
  const int a = x.a, b = x.b, c = y.a, d = y.b;
  if (x == y) return std::nullopt;
  if (b == c) return oriented(1, a, d);
  if (a == d) return oriented(1, b, c);
  if (b == d) return oriented(-1, a, c);
  if (a == c) return oriented(-1, b, d);
  return std::nullopt;
}

std::vector<BasisElement> so_basis(int n) {
  std::vector<BasisElement> out;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) out.push_back({a, b});
  }
  return out;
}

std::string_view label(Module m) {
  switch (m) {
    case Module::m1: return "m1";
    case Module::m2: return "m2";
    case Module::m3: return "m3";
    case Module::m12: return "m12";
    case Module::m13: return "m13";
    case Module::m23: return "m23";
  }
  return "?";
}

Module parse_module(std::string_view s) {
  for (Module m : kModules) {
    if (label(m) == s) return m;
  }
  throw StructuralError("unknown module label: " + std::string(s));
}

std::string variable_name(Module m) { return "x" + std::string(label(m).substr(1)); }

bool is_diagonal_block(Module m) { return m == Module::m1 || m == Module::m2 || m == Module::m3; }

Decomposition::Decomposition(int k1, int k2, int k3) : k_{k1, k2, k3} {
  if (k3 < 1 || k2 < k3 || k1 < k2) {
    throw StructuralError("decomposition must satisfy k1 >= k2 >= k3 >= 1, got (" +
                          std::to_string(k1) + "," + std::to_string(k2) + "," +
                          std::to_string(k3) + ")");
  }
  if (k1 + k2 + k3 < 3) throw StructuralError("need n >= 3");
}

int Decomposition::block_of(int index) const {
  if (index < 1 || index > n()) throw StructuralError("index outside 1..n");
  if (index <= k_[0]) return 1;
  if (index <= k_[0] + k_[1]) return 2;
  return 3;
}

Module Decomposition::module_of(const BasisElement& e) const {
  int p = block_of(e.a), q = block_of(e.b);
  if (p > q) std::swap(p, q);
  if (p == q) return static_cast<Module>(p - 1);
  if (p == 1 && q == 2) return Module::m12;
  if (p == 1) return Module::m13;
  return Module::m23;
}

int Decomposition::dim(Module m) const {
  switch (m) {
    case Module::m1: return k_[0] * (k_[0] - 1) / 2;
    case Module::m2: return k_[1] * (k_[1] - 1) / 2;
    case Module::m3: return k_[2] * (k_[2] - 1) / 2;
    case Module::m12: return k_[0] * k_[1];
    case Module::m13: return k_[0] * k_[2];
    case Module::m23: return k_[1] * k_[2];
  }
  return 0;
}

std::vector<BasisElement> Decomposition::basis_of(Module m) const {
  std::vector<BasisElement> out;
  for (const auto& e : so_basis(n())) {
    if (module_of(e) == m) out.push_back(e);
  }
  return out;
}

std::vector<Module> Decomposition::nonempty_modules() const {
  std::vector<Module> out;
  for (Module m : kModules) {
    if (dim(m) > 0) out.push_back(m);
  }
  return out;
}

const Rational& TripletTable::get(Module k, Module i, Module j) const { return v_[idx(k, i, j)]; }

void TripletTable::set(Module k, Module i, Module j, const Rational& v) { v_[idx(k, i, j)] = v; }

void TripletTable::set_symmetric(Module a, Module b, Module c, const Rational& v) {
  std::array<Module, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  do {
    set(t[0], t[1], t[2], v);
  } while (std::next_permutation(t.begin(), t.end()));
}

std::vector<TripletTable::Entry> TripletTable::entries() const {
  std::vector<Entry> out;
  for (Module a : kModules) {
    for (Module b : kModules) {
      if (b < a) continue;
      for (Module c : kModules) {
        if (c < b) continue;
        const Rational& v = get(a, b, c);
        if (v != 0) out.push_back({{a, b, c}, v});
      }
    }
  }
  return out;
}

bool TripletTable::is_symmetric() const {
  for (Module k : kModules) {
    for (Module i : kModules) {
      for (Module j : kModules) {
        const Rational& v = get(k, i, j);
        if (v != get(k, j, i) || v != get(j, k, i)) return false;
      }
    }
  }
  return true;
}

TripletTable triplets_bruteforce(const Decomposition& d) {
  const int n = d.n();
  auto basis = so_basis(n);
  std::array<long, 216> count{};
  std::vector<Module> mod;
  for (const auto& e : basis) mod.push_back(d.module_of(e));
  for (std::size_t x = 0; x < basis.size(); ++x) {
    for (std::size_t y = 0; y < basis.size(); ++y) {
      auto r = bracket(basis[x], basis[y]);
      if (!r) continue;
      Module k = d.module_of(r->element);
      ++count[static_cast<std::size_t>(k) * 36 + static_cast<std::size_t>(mod[x]) * 6 +
              static_cast<std::size_t>(mod[y])];
    }
  }
  TripletTable t(d);
  Rational unit(1, 2 * (n - 2));
  for (Module k : kModules) {
    for (Module i : kModules) {
      for (Module j : kModules) {
        long c = count[static_cast<std::size_t>(k) * 36 + static_cast<std::size_t>(i) * 6 +
                       static_cast<std::size_t>(j)];
        if (c) t.set(k, i, j, unit * c);
      }
    }
  }
  return t;
}

namespace {

Module pair_module(int a, int b) {
  if (a > b) std::swap(a, b);
  if (a == 1 && b == 2) return Module::m12;
  if (a == 1) return Module::m13;
  return Module::m23;
}

}  // namespace

TripletTable triplets_closed_form(const Decomposition& d) {
  TripletTable t(d);
  const int n = d.n();
  const Rational den(2 * (n - 2));
  for (int a = 1; a <= 3; ++a) {
    Rational ka = d.k(a);
    Module ma = static_cast<Module>(a - 1);
    t.set_symmetric(ma, ma, ma, ka * (ka - 1) * (ka - 2) / den);
    for (int b = 1; b <= 3; ++b) {
      if (b == a) continue;
      Rational kb = d.k(b);
      Module mab = pair_module(a, b);
      t.set_symmetric(ma, mab, mab, ka * kb * (ka - 1) / den);
    }
  }
  Rational k1 = d.k(1), k2 = d.k(2), k3 = d.k(3);
  t.set_symmetric(Module::m12, Module::m13, Module::m23, k1 * k2 * k3 / den);
  return t;
}

namespace {

using SparseVec = std::map<std::pair<int, int>, int>;

SparseVec bracket_vec(const SparseVec& x, const SparseVec& y) {
  SparseVec out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y)
      if (auto r = bracket({a.first, a.second}, {b.first, b.second}))
        out[{r->element.a, r->element.b}] += r->sign * ca * cb;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

SparseVec plus(SparseVec a, const SparseVec& b) {
  for (const auto& [k, v] : b) a[k] += v;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

}  // namespace

bool bracket_identities_hold(int n) {
  auto basis = so_basis(n);
  std::vector<SparseVec> units;
  for (const auto& e : basis) units.push_back({{{e.a, e.b}, 1}});
  for (const auto& x : units)
    for (const auto& y : units) {
      auto xy = bracket_vec(x, y);
      if (!plus(xy, bracket_vec(y, x)).empty()) return false;
      for (const auto& z : units) {
        auto j = plus(plus(bracket_vec(x, bracket_vec(y, z)), bracket_vec(y, bracket_vec(z, x))),
                      bracket_vec(z, xy));
        if (!j.empty()) return false;
      }
    }
  return true;
}

}  // namespace einso::liealg
