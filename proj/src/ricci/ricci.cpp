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

#include "einso/ricci/ricci.hpp"

#include <algorithm>

#include "einso/exact/errors.hpp"

namespace einso::ricci {

using liealg::Decomposition;
using liealg::Module;

RationalFunction::RationalFunction(RingPtr ring) : num_(ring), den_(ring->size()) {}

RationalFunction::RationalFunction(MultiPoly numerator, Monomial denominator)
    : num_(std::move(numerator)), den_(denominator) {
  if (den_.size() != num_.ring().size()) throw StructuralError("denominator outside the ring");
  normalize();
}

RationalFunction RationalFunction::laurent(RingPtr ring, const Rational& c,
                                           const std::map<std::string, int>& exps) {
  Monomial up(ring->size()), down(ring->size());
  for (const auto& [name, e] : exps) {
    std::size_t v = ring->require(name);
    if (e > 0) up.set(v, static_cast<unsigned>(e));
    if (e < 0) down.set(v, static_cast<unsigned>(-e));
  }
  MultiPoly num = MultiPoly::from_terms(ring, {{up, c}});
  return RationalFunction(std::move(num), down);
}

MultiPoly RationalFunction::denominator_poly() const {
  return MultiPoly::from_terms(num_.ring_ptr(), {{den_, Rational(1)}});
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Monomial(den_.size());
    return;
  }
  Monomial g = gcd(monomial_content(num_), den_);
  if (!g.is_one()) {
    num_ = divide_monomial(num_, g);
    den_ = den_ / g;
  }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (!(num_.ring() == o.num_.ring())) throw StructuralError("rational function ring mismatch");
  Monomial l = lcm(den_, o.den_);
  num_ = num_.mul_term(l / den_, 1) + o.num_.mul_term(l / o.den_, 1);
  den_ = l;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  return *this += o * Rational(-1);
}

RationalFunction& RationalFunction::operator*=(const Rational& c) {
  num_ *= c;
  normalize();
  return *this;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_.mul_term(b.den_, 1) == b.num_.mul_term(a.den_, 1);
}

Rational RationalFunction::evaluate(const std::map<std::string, Rational>& point) const {
  Rational d = denominator_poly().evaluate(point);
  if (d == 0) throw DomainError("rational function evaluated at a pole");
  return num_.evaluate(point) / d;
}

std::pair<MultiPoly, MultiPoly> RationalFunction::substitute(
    const std::map<std::string, MultiPoly>& bindings, RingPtr target) const {
  return {num_.substitute(bindings, target), denominator_poly().substitute(bindings, target)};
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + denominator_poly().to_string() + ")";
}

std::vector<std::string> metric_variables(const Decomposition& d) {
  std::vector<std::string> out;
  for (Module m : d.nonempty_modules()) out.push_back(liealg::variable_name(m));
  return out;
}

RingPtr metric_ring(const Decomposition& d) { return make_ring(metric_variables(d)); }

std::map<Module, Rational> RicciSystem::evaluate(const std::map<std::string, Rational>& metric) const {
  std::map<Module, Rational> out;
  for (const auto& [m, r] : components) out[m] = r.evaluate(metric);
  return out;
}

RicciSystem ricci_generic(const Decomposition& d, const liealg::TripletTable& t) {
  RicciSystem sys{d, metric_ring(d), {}};
  auto mods = d.nonempty_modules();
  for (Module k : mods) {
    const std::string xk = liealg::variable_name(k);
    const Rational dk = d.dim(k);
    RationalFunction r = RationalFunction::laurent(sys.ring, Rational(1, 2), {{xk, -1}});
    for (Module j : mods) {
      for (Module i : mods) {
        const std::string xj = liealg::variable_name(j), xi = liealg::variable_name(i);
        if (const Rational& a = t.get(k, j, i); a != 0) {
          std::map<std::string, int> e{{xk, 1}};
          e[xj] -= 1;
          e[xi] -= 1;
          r += RationalFunction::laurent(sys.ring, a / (4 * dk), e);
        }
        if (const Rational& b = t.get(j, k, i); b != 0) {
          std::map<std::string, int> e{{xj, 1}};
          e[xk] -= 1;
          e[xi] -= 1;
          r -= RationalFunction::laurent(sys.ring, b / (2 * dk), e);
        }
      }
    }
    sys.components.emplace(k, std::move(r));
  }
  return sys;
}

RicciSystem ricci_closed_form(const Decomposition& d) {
  const int k1 = d.k(1), k2 = d.k(2), k3 = d.k(3), n = d.n();
  if (k1 < 2) throw StructuralError("closed-form Ricci components need k1 >= 2");
  RicciSystem sys{d, metric_ring(d), {}};
  auto T = [&](const Rational& c, std::map<std::string, int> e) {
    return RationalFunction::laurent(sys.ring, c, e);
  };
  const Rational c(1, 4 * (n - 2));
  const Rational half(1, 2);
  // x12/(x13 x23) - x13/(x12 x23) - x23/(x12 x13) and its two rotations
  auto cyc = [&](const std::string& a, const std::string& b, const std::string& cc) {
    return T(1, {{a, 1}, {b, -1}, {cc, -1}}) - T(1, {{b, 1}, {a, -1}, {cc, -1}}) -
           T(1, {{cc, 1}, {a, -1}, {b, -1}});
  };
  auto& R = sys.components;
  if (k3 >= 2) {
    R.emplace(Module::m1, T(c * (k1 - 2), {{"x1", -1}}) +
                              c * (T(k2, {{"x1", 1}, {"x12", -2}}) + T(k3, {{"x1", 1}, {"x13", -2}})));
    R.emplace(Module::m2, T(c * (k2 - 2), {{"x2", -1}}) +
                              c * (T(k1, {{"x2", 1}, {"x12", -2}}) + T(k3, {{"x2", 1}, {"x23", -2}})));
    R.emplace(Module::m3, T(c * (k3 - 2), {{"x3", -1}}) +
                              c * (T(k1, {{"x3", 1}, {"x13", -2}}) + T(k2, {{"x3", 1}, {"x23", -2}})));
    R.emplace(Module::m12, T(half, {{"x12", -1}}) + c * k3 * cyc("x12", "x13", "x23") -
                               c * (T(k1 - 1, {{"x1", 1}, {"x12", -2}}) +
                                    T(k2 - 1, {{"x2", 1}, {"x12", -2}})));
    R.emplace(Module::m13, T(half, {{"x13", -1}}) + c * k2 * cyc("x13", "x12", "x23") -
                               c * (T(k1 - 1, {{"x1", 1}, {"x13", -2}}) +
                                    T(k3 - 1, {{"x3", 1}, {"x13", -2}})));
    R.emplace(Module::m23, T(half, {{"x23", -1}}) + c * k1 * cyc("x23", "x13", "x12") -
                               c * (T(k2 - 1, {{"x2", 1}, {"x23", -2}}) +
                                    T(k3 - 1, {{"x3", 1}, {"x23", -2}})));
  } else if (k2 >= 2) {
    R.emplace(Module::m1, T(c * (k1 - 2), {{"x1", -1}}) +
                              c * (T(k2, {{"x1", 1}, {"x12", -2}}) + T(1, {{"x1", 1}, {"x13", -2}})));
    R.emplace(Module::m2, T(c * (k2 - 2), {{"x2", -1}}) +
                              c * (T(k1, {{"x2", 1}, {"x12", -2}}) + T(1, {{"x2", 1}, {"x23", -2}})));
    R.emplace(Module::m12, T(half, {{"x12", -1}}) +
                               c * (cyc("x12", "x13", "x23") - T(k1 - 1, {{"x1", 1}, {"x12", -2}}) -
                                    T(k2 - 1, {{"x2", 1}, {"x12", -2}})));
    R.emplace(Module::m13, T(half, {{"x13", -1}}) +
                               c * (k2 * cyc("x13", "x12", "x23") - T(k1 - 1, {{"x1", 1}, {"x13", -2}})));
    R.emplace(Module::m23, T(half, {{"x23", -1}}) +
                               c * (k1 * cyc("x23", "x13", "x12") - T(k2 - 1, {{"x2", 1}, {"x23", -2}})));
  } else {
    R.emplace(Module::m1, T(c * (n - 4), {{"x1", -1}}) +
                              c * (T(1, {{"x1", 1}, {"x12", -2}}) + T(1, {{"x1", 1}, {"x13", -2}})));
    R.emplace(Module::m12, T(half, {{"x12", -1}}) +
                               c * (cyc("x12", "x13", "x23") - T(n - 3, {{"x1", 1}, {"x12", -2}})));
    R.emplace(Module::m13, T(half, {{"x13", -1}}) +
                               c * (cyc("x13", "x12", "x23") - T(n - 3, {{"x1", 1}, {"x13", -2}})));
    R.emplace(Module::m23, T(half, {{"x23", -1}}) + Rational(1, 4) * cyc("x23", "x13", "x12"));
  }
  return sys;
}

namespace {

struct BasisData {
  std::vector<liealg::BasisElement> basis;
  std::vector<Rational> g;  // <e, e> under the metric
  std::map<std::pair<int, int>, std::size_t> index;
};

BasisData basis_data(const Decomposition& d, const std::map<std::string, Rational>& metric) {
  BasisData bd;
  bd.basis = liealg::so_basis(d.n());
  const Rational killing(2 * (d.n() - 2));
  std::map<Module, Rational> x;
  for (Module m : d.nonempty_modules()) {
    auto it = metric.find(liealg::variable_name(m));
    if (it == metric.end()) throw StructuralError("metric value missing for " + liealg::variable_name(m));
    if (it->second <= 0) throw DomainError("metric values must be positive");
    x[m] = it->second;
  }
  for (std::size_t i = 0; i < bd.basis.size(); ++i) {
    bd.g.push_back(x.at(d.module_of(bd.basis[i])) * killing);
    bd.index[{bd.basis[i].a, bd.basis[i].b}] = i;
  }
  return bd;
}

Rational bilinear(const Decomposition& d, const BasisData& bd, std::size_t x, std::size_t y) {
  const auto& B = bd.basis;
  Rational t1 = 0;
  for (std::size_t c = 0; c < B.size(); ++c) {
    auto u = liealg::bracket(B[x], B[c]);
    if (!u) continue;
    auto v = liealg::bracket(B[y], B[c]);
    if (!v || !(u->element == v->element)) continue;
    std::size_t e = bd.index.at({u->element.a, u->element.b});
    t1 += Rational(u->sign * v->sign) * bd.g[e] / bd.g[c];
  }
  Rational t3 = 0;
  if (x == y) {
    for (std::size_t c = 0; c < B.size(); ++c) {
      for (std::size_t e = 0; e < B.size(); ++e) {
        auto w = liealg::bracket(B[c], B[e]);
        if (!w || !(w->element == B[x])) continue;
        t3 += bd.g[x] * bd.g[x] / (bd.g[c] * bd.g[e]);
      }
    }
  }
  Rational killing_xy = x == y ? Rational(-2 * (d.n() - 2)) : Rational(0);
  return -t1 / 2 - killing_xy / 2 + t3 / 4;
}

}  // namespace

Rational ricci_bilinear(const Decomposition& d, const std::map<std::string, Rational>& metric,
                        const liealg::BasisElement& x, const liealg::BasisElement& y) {
  BasisData bd = basis_data(d, metric);
  return bilinear(d, bd, bd.index.at({x.a, x.b}), bd.index.at({y.a, y.b}));
}

Rational ricci_offdiag_check(int n, const std::map<std::string, Rational>& metric) {
  if (n < 4) throw StructuralError("the (n-2,1,1) decomposition needs n >= 4");
  Decomposition d(n - 2, 1, 1);
  BasisData bd = basis_data(d, metric);
  Rational worst = 0;
  for (const auto& x : d.basis_of(Module::m12)) {
    for (const auto& y : d.basis_of(Module::m13)) {
      Rational r = bilinear(d, bd, bd.index.at({x.a, x.b}), bd.index.at({y.a, y.b}));
      worst = std::max(worst, Rational(abs(r)));
    }
  }
  return worst;
}

bool scaling_law_holds(const RicciSystem& sys) {
  auto vars = metric_variables(sys.decomposition);
  std::vector<std::string> names = vars;
  names.push_back("c");
  auto S = make_ring(names);
  auto c = MultiPoly::variable(S, "c");
  std::map<std::string, MultiPoly> scaled;
  for (const auto& v : vars) scaled.emplace(v, c * MultiPoly::variable(S, v));
  for (const auto& [m, r] : sys.components) {
    auto [num, den] = r.substitute(scaled, S);
    if (num * c * r.denominator_poly().to_ring(S) != r.numerator().to_ring(S) * den) return false;
  }
  return true;
}

}  // namespace einso::ricci
