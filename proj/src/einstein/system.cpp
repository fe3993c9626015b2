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

#include "einso/einstein/system.hpp"

#include <algorithm>

#include "einso/exact/errors.hpp"

namespace einso::einstein {

using liealg::Decomposition;
using liealg::Module;

Ansatz ansatz_of(const Decomposition& d) {
  if (d.k(3) >= 2) return Ansatz::ThreeBlocks;
  if (d.k(2) >= 2) return Ansatz::TwoBlocks;
  if (d.k(1) < 2) throw StructuralError("so(1+1+1) has no diagonal ansatz");
  return Ansatz::OneBlock;
}

namespace {

// Order of the consecutive differences and the default elimination order.
std::vector<Module> equation_order(Ansatz a) {
  switch (a) {
    case Ansatz::ThreeBlocks:
      return {Module::m1, Module::m2, Module::m3, Module::m12, Module::m13, Module::m23};
    case Ansatz::TwoBlocks:
      return {Module::m1, Module::m2, Module::m12, Module::m23, Module::m13};
    case Ansatz::OneBlock:
      return {Module::m1, Module::m12, Module::m23, Module::m13};
  }
  return {};
}

std::vector<std::string> default_precedence(Ansatz a) {
  switch (a) {
    case Ansatz::ThreeBlocks:
      return {"x1", "x2", "x3", "x12", "x13", "x23"};
    case Ansatz::TwoBlocks:
      return {"x1", "x2", "x12", "x13", "x23"};
    case Ansatz::OneBlock:
      return {"x23", "x13", "x12", "x1"};
  }
  return {};
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

}  // namespace

std::pair<std::string, std::string> parse_binding(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos) throw StructuralError("binding '" + text + "' lacks '='");
  std::string var = trim(text.substr(0, eq)), rhs = trim(text.substr(eq + 1));
  if (var.empty() || rhs.empty()) throw StructuralError("malformed binding '" + text + "'");
  return {var, rhs};
}

EinsteinSystem build_system(const Decomposition& d, const Specialization& spec) {
  const Ansatz a = ansatz_of(d);
  ricci::RicciSystem rs = ricci::ricci_closed_form(d);
  const auto vars = ricci::metric_variables(d);

  for (const auto& [v, rhs] : spec) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end())
      throw StructuralError("unknown metric variable '" + v + "'");
  }

  // Scale is fixed by a binding to a nonzero constant, else by x23 = 1.
  bool scale_fixed = false;
  for (const auto& [v, rhs] : spec) {
    auto probe = parse_poly(rhs, make_ring(vars));
    if (probe.is_constant() && !probe.is_zero()) scale_fixed = true;
  }
  Specialization bindings = spec;
  if (!scale_fixed) {
    if (bindings.count("x23")) throw StructuralError("specialization must fix the scale");
    bindings["x23"] = "1";
  }

  std::vector<std::string> unknowns;
  for (const auto& v : default_precedence(a))
    if (std::find(vars.begin(), vars.end(), v) != vars.end() && !bindings.count(v))
      unknowns.push_back(v);
  RingPtr ring = make_ring(unknowns);

  // Resolve chained bindings such as x2 = x23, x23 = 1 over the full ring.
  RingPtr full = make_ring(vars);
  std::map<std::string, MultiPoly> resolved;
  for (const auto& [v, rhs] : bindings) resolved.emplace(v, parse_poly(rhs, full));
  for (std::size_t round = 0;; ++round) {
    if (round > vars.size()) throw StructuralError("cyclic specialization");
    bool changed = false;
    for (auto& [v, p] : resolved) {
      bool mentions = false;
      for (std::size_t i : p.variables()) mentions = mentions || resolved.count(full->name(i));
      if (mentions) {
        p = p.substitute(resolved, full);
        changed = true;
      }
    }
    if (!changed) break;
  }

  std::map<std::string, MultiPoly> metric;
  for (const auto& v : vars) {
    auto it = resolved.find(v);
    MultiPoly value = it == resolved.end() ? MultiPoly::variable(ring, v) : it->second.to_ring(ring);
    if (value.is_zero()) throw DomainError("binding sets " + v + " to zero");
    metric.emplace(v, std::move(value));
  }

  EinsteinSystem sys{d, std::move(rs), metric, ring, {}, unknowns, spec};
  std::vector<Module> order;
  for (Module m : equation_order(a))
    if (d.dim(m) > 0) order.push_back(m);
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    ricci::RationalFunction diff = sys.ricci.components.at(order[i]) - sys.ricci.components.at(order[i + 1]);
    auto [num, den] = diff.substitute(metric, ring);
    (void)den;
    if (num.is_zero()) continue;
    num = divide_monomial(num, monomial_content(num));
    auto [c, prim] = content_primitive(num);
    (void)c;
    bool dup = false;
    for (const auto& g : sys.polynomials) dup = dup || equal_up_to_scalar(g, prim);
    if (!dup) sys.polynomials.push_back(std::move(prim));
  }
  return sys;
}

std::map<std::string, Rational> expand_point(const EinsteinSystem& sys,
                                             const std::map<std::string, Rational>& unknowns) {
  std::map<std::string, Rational> out;
  for (const auto& [v, p] : sys.metric) out[v] = p.evaluate(unknowns);
  return out;
}

}  // namespace einso::einstein
