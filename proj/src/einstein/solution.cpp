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

#include "einso/einstein/solution.hpp"

#include <algorithm>

#include "einso/exact/errors.hpp"

namespace einso::einstein {

using realroots::IsolatingInterval;

Rational tolerance_floor() {
  static const Rational floor(Integer(1), Integer("1000000000000000000000000000000"));
  return floor;
}

Interval evaluate(const MultiPoly& p, std::span<const Interval> box, unsigned bits) {
  if (box.size() != p.ring().size()) throw StructuralError("box does not match the ring");
  Interval sum = Interval::point(Rational(0));
  for (const auto& t : p.terms()) {
    Interval v = Interval::point(t.coeff);
    for (std::size_t i = 0; i < box.size(); ++i) {
      for (unsigned e = 0; e < t.monomial[i]; ++e) {
        v = v * box[i];
        if (bits) v = widen_to_dyadic(v, bits);
      }
    }
    sum = sum + v;
    if (bits) sum = widen_to_dyadic(sum, bits);
  }
  return sum;
}

UPoly compose_mod(const MultiPoly& p, const std::vector<UPoly>& values, const UPoly& m) {
  if (values.size() != p.ring().size()) throw StructuralError("values do not match the ring");
  std::map<std::pair<std::size_t, unsigned>, UPoly> powers;
  auto power = [&](std::size_t i, unsigned e) -> const UPoly& {
    auto it = powers.find({i, e});
    if (it != powers.end()) return it->second;
    unsigned have = 1;
    UPoly acc = realroots::rem(values[i], m);
    for (unsigned k = e - 1; k >= 1; --k) {
      if (auto f = powers.find({i, k}); f != powers.end()) {
        acc = f->second;
        have = k;
        break;
      }
    }
    for (unsigned k = have + 1; k <= e; ++k) {
      acc = realroots::mulmod(acc, values[i], m);
      powers[{i, k}] = acc;
    }
    return powers.emplace(std::make_pair(i, e), acc).first->second;
  };
  UPoly out;
  for (const auto& t : p.terms()) {
    UPoly term{t.coeff};
    for (std::size_t i = 0; i < values.size(); ++i)
      if (t.monomial[i] > 0) term = realroots::mulmod(term, power(i, t.monomial[i]), m);
    out = realroots::add(out, term);
  }
  return realroots::rem(out, m);
}

AlgebraicWitness::AlgebraicWitness(RingPtr ring, UPoly minpoly, IsolatingInterval root,
                                   std::vector<UPoly> coords)
    : ring_(std::move(ring)), minpoly_(realroots::primitive(minpoly)), root_(std::move(root)),
      coords_(std::move(coords)) {
  root_ = realroots::refine_squarefree(minpoly_, root_, Rational(Integer(1), Integer(1) << 64));
  if (coords_.size() != ring_->size()) throw StructuralError("coordinate count does not match the ring");
  std::vector<std::optional<Rational>> found;
  for (std::size_t i = 0; i < coords_.size(); ++i) found.push_back(detect_rational(i));
  rational_ = std::move(found);
}

bool AlgebraicWitness::root_of(const UPoly& f) const {
  UPoly r = realroots::rem(f, minpoly_);
  if (realroots::is_zero(r)) return true;
  if (root_.is_exact()) return realroots::evaluate(r, root_.low) == 0;
  if (!realroots::evaluate(r, root_.as_interval(), 128).contains_zero()) return false;
  IsolatingInterval narrow = realroots::refine_squarefree(minpoly_, root_, Rational(Integer(1), Integer(1) << 256));
  if (narrow.is_exact()) return realroots::evaluate(r, narrow.low) == 0;
  if (!realroots::evaluate(r, narrow.as_interval(), 320).contains_zero()) return false;
  UPoly g = realroots::gcd(r, minpoly_);
  if (realroots::degree(g) <= 0) return false;
  // The interval isolates the root among the roots of minpoly, and g divides it.
  return realroots::count_roots(g, root_.low, root_.high) > 0;
}

int AlgebraicWitness::sign_of(const UPoly& f) const {
  if (root_of(f)) return 0;
  if (root_.is_exact()) return realroots::sign_at(f, root_.low);
  IsolatingInterval iv = root_;
  Rational width = iv.high - iv.low;
  while (true) {
    Interval v = realroots::evaluate(f, iv.as_interval());
    if (v.lo > 0) return 1;
    if (v.hi < 0) return -1;
    width /= Rational(65536);
    iv = realroots::refine_squarefree(minpoly_, iv, width);
    if (iv.is_exact()) return realroots::sign_at(f, iv.low);
  }
}

int AlgebraicWitness::sign(const MultiPoly& f) const {
  return sign_of(compose_mod(f.to_ring(ring_), coords_, minpoly_));
}

std::optional<bool> AlgebraicWitness::vanishes(const MultiPoly& f) const {
  return root_of(compose_mod(f.to_ring(ring_), coords_, minpoly_));
}

std::vector<Interval> AlgebraicWitness::enclose(const Rational& width) const {
  std::vector<Interval> out(coords_.size());
  auto pin = [&] {
    for (std::size_t i = 0; i < rational_.size(); ++i)
      if (rational_[i]) out[i] = Interval::point(*rational_[i]);
  };
  if (root_.is_exact()) {
    for (std::size_t i = 0; i < coords_.size(); ++i)
      out[i] = Interval::point(realroots::evaluate(coords_[i], root_.low));
    return out;
  }
  Rational w = width;
  unsigned bits = 64;
  for (Rational t = width; t < 1; t *= 2) ++bits;
  for (int attempt = 0; attempt < 40; ++attempt) {
    IsolatingInterval iv = realroots::refine_squarefree(minpoly_, root_, w);
    bool ok = true;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (iv.is_exact()) {
        out[i] = Interval::point(realroots::evaluate(coords_[i], iv.low));
      } else {
        out[i] = realroots::evaluate(coords_[i], iv.as_interval(), bits);
      }
      ok = ok && (out[i].width() <= width || (i < rational_.size() && rational_[i]));
    }
    pin();
    if (ok) return out;
    w /= Rational(Integer(1) << 32);
    bits += 32;
  }
  return out;
}

std::optional<Rational> AlgebraicWitness::detect_rational(std::size_t i) const {
  const UPoly& c = coords_.at(i);
  if (realroots::degree(c) <= 0) return c.empty() ? Rational(0) : c[0];
  if (root_.is_exact()) return realroots::evaluate(c, root_.low);
  Rational width(Integer(1), Integer(1) << 80);
  Interval iv = enclose(width)[i];
  Rational q = simplest_between(iv.lo, iv.hi);
  // Rational values of interest have small denominators; larger ones are
  // left to the enclosure.
  if (q.get_den() > Integer(1) << 24) return std::nullopt;
  if (root_of(realroots::sub(c, UPoly{q}))) return q;
  return std::nullopt;
}

BoxWitness::BoxWitness(RingPtr ring, std::vector<Interval> box, bool certified)
    : ring_(std::move(ring)), box_(std::move(box)), certified_(certified) {
  if (box_.size() != ring_->size()) throw StructuralError("box does not match the ring");
}

std::vector<Interval> BoxWitness::enclose(const Rational&) const { return box_; }

std::optional<bool> BoxWitness::vanishes(const MultiPoly& f) const {
  Interval v = evaluate(f.to_ring(ring_), box_);
  if (!v.contains_zero()) return false;
  return std::nullopt;
}

std::string to_string(Kind k) {
  switch (k) {
    case Kind::NaturallyReductive:
      return "nr";
    case Kind::NonNaturallyReductive:
      return "non_nr";
    case Kind::Undecided:
      return "undecided";
  }
  return "undecided";
}

std::string to_string(Status s) { return s == Status::Exact ? "exact" : "numeric-only"; }

std::optional<std::size_t> SolutionRecord::index_of(const std::string& var) const {
  auto it = std::find(variables.begin(), variables.end(), var);
  if (it == variables.end()) return std::nullopt;
  return static_cast<std::size_t>(it - variables.begin());
}

double SolutionRecord::approx(const std::string& var) const {
  auto i = index_of(var);
  if (!i) throw StructuralError("no coordinate " + var);
  return to_double(coords[*i].midpoint());
}

double SolutionRecord::approx_scaled(const std::string& var) const {
  auto i = index_of(var);
  if (!i || scaled.empty()) throw StructuralError("no scaled coordinate " + var);
  return to_double(scaled[*i].midpoint());
}

}  // namespace einso::einstein
