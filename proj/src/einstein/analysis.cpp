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

#include "einso/einstein/analysis.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "einso/exact/errors.hpp"

namespace einso::einstein {

using liealg::Decomposition;

Rational scaling_width() {
  static const Rational w(Integer(1), Integer("10000000000000000000000000000000000000000"));
  return w;
}

namespace {

// Box of the witness re-indexed by the names of `ring`.
std::vector<Interval> box_for(const SolutionRecord& rec, const std::vector<Interval>& box, const Ring& ring) {
  std::vector<Interval> out;
  for (const auto& name : ring.names()) {
    auto i = rec.index_of(name);
    if (!i) throw StructuralError("record lacks " + name);
    out.push_back(box[*i]);
  }
  return out;
}

std::string so(int k) { return "SO(" + std::to_string(k) + ")"; }

std::string product(std::vector<int> ks) {
  std::string s;
  for (int k : ks) {
    if (k < 2) continue;
    if (!s.empty()) s += "x";
    s += so(k);
  }
  return s;
}

std::optional<bool> holds(const SolutionRecord& rec, const ReductiveCase& c) {
  const RingPtr& ring = rec.witness->ring();
  bool unknown = false;
  for (const auto& g : c.groups) {
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
      MultiPoly diff = MultiPoly::variable(ring, g[i]) - MultiPoly::variable(ring, g[i + 1]);
      auto v = rec.witness->vanishes(diff);
      if (!v) {
        unknown = true;
      } else if (!*v) {
        return false;
      }
    }
  }
  if (unknown) return std::nullopt;
  return true;
}

// Solves the system restricted to the case exactly and checks whether one of
// its solutions lies in the certified box of a numeric record.
bool confirm_case(const SolutionRecord& rec, const Decomposition& d, const ReductiveCase& c) {
  auto* box_witness = dynamic_cast<const BoxWitness*>(rec.witness.get());
  if (!box_witness || !box_witness->certified()) return false;
  const auto& box = box_witness->box();
  std::optional<std::size_t> norm;
  for (std::size_t i = 0; i < box.size() && !norm; ++i)
    if (box[i].is_point()) norm = i;
  if (!norm) return false;
  Rational width = scaling_width();
  for (const auto& v : box)
    if (!v.is_point() && v.width() < width) width = v.width();
  width /= Rational(1000000);

  Specialization spec;
  for (const auto& g : c.groups) {
    std::string rep = std::find(g.begin(), g.end(), "x23") != g.end() ? "x23" : g.back();
    for (const auto& v : g)
      if (v != rep) spec[v] = rep;
  }
  try {
    EinsteinSystem cs = build_system(d, spec);
    std::vector<std::vector<Interval>> points;
    if (cs.ring->size() == 0) {
      for (const auto& p : cs.polynomials)
        if (!p.is_zero()) return false;
      std::vector<Interval> pt;
      for (const auto& name : cs.ricci.ring->names())
        pt.push_back(Interval::point(cs.metric.at(name).constant_term()));
      points.push_back(std::move(pt));
    } else {
      ExactOptions eo;
      eo.budget.max_reductions = 200000;
      eo.lex_basis = false;
      for (const auto& s : solve_exact(cs, eo).solutions) points.push_back(s.witness->enclose(width));
    }
    for (auto& pt : points) {
      // Renormalize to the record's fixed coordinate.
      const Interval& fixed = box[*norm];
      bool inside = true;
      for (std::size_t i = 0; i < pt.size() && inside; ++i) {
        Interval v = pt[i] * Interval::point(fixed.lo) / pt[*norm];
        inside = box[i].lo <= v.lo && v.hi <= box[i].hi;
      }
      if (inside) return true;
    }
  } catch (const std::exception&) {
    return false;
  }
  return false;
}

}  // namespace

SolutionRecord scale_to_unit(SolutionRecord rec, const ricci::RicciSystem& sys) {
  if (!rec.witness) throw StructuralError("record has no witness");
  auto box = rec.witness->enclose(scaling_width());
  auto local = box_for(rec, box, *sys.ring);
  bool rational = std::all_of(local.begin(), local.end(), [](const Interval& v) { return v.is_point(); });
  Interval lambda;
  bool first = true;
  for (const auto& [m, r] : sys.components) {
    Interval value;
    if (rational) {
      std::vector<Rational> pt;
      for (const auto& v : local) pt.push_back(v.lo);
      value = Interval::point(r.numerator().evaluate(pt) / r.denominator_poly().evaluate(pt));
    } else {
      value = evaluate(r.numerator(), local) / evaluate(r.denominator_poly(), local);
    }
    if (first) {
      lambda = value;
      first = false;
    } else {
      if (!lambda.overlaps(value))
        throw DomainError("Ricci components differ at the point (" + std::string(liealg::label(m)) + ")");
      lambda = {std::max(lambda.lo, value.lo), std::min(lambda.hi, value.hi)};
    }
  }
  if (lambda.lo <= 0) throw DomainError("Einstein constant is not positive");
  rec.coords = box;
  rec.einstein_constant = lambda;
  rec.scaled.clear();
  for (const auto& v : box) rec.scaled.push_back(v * lambda);
  return rec;
}

SolutionRecord rational_record(const Decomposition& d, const std::map<std::string, Rational>& metric) {
  RingPtr ring = ricci::metric_ring(d);
  std::vector<UPoly> coords;
  for (const auto& name : ring->names()) {
    auto it = metric.find(name);
    if (it == metric.end()) throw StructuralError("missing metric value " + name);
    if (it->second <= 0) throw DomainError(name + " must be positive");
    coords.push_back(UPoly{it->second});
  }
  for (const auto& [name, v] : metric)
    if (!ring->index_of(name)) throw StructuralError("unknown metric variable " + name);
  SolutionRecord rec;
  rec.k = d.ks();
  rec.variables = ring->names();
  rec.status = Status::Exact;
  rec.witness = std::make_shared<AlgebraicWitness>(ring, UPoly{0, 1}, realroots::IsolatingInterval{0, 0},
                                                   std::move(coords));
  rec = scale_to_unit(std::move(rec), ricci::ricci_closed_form(d));
  rec.classification = classify(rec, d);
  return rec;
}

std::vector<ReductiveCase> reductive_cases(const Decomposition& d) {
  const int k1 = d.k(1), k2 = d.k(2), k3 = d.k(3), n = d.n();
  std::vector<ReductiveCase> out;
  std::vector<std::string> all = ricci::metric_variables(d);
  out.push_back({0, {all}, so(n)});
  switch (ansatz_of(d)) {
    case Ansatz::ThreeBlocks:
      out.push_back({1, {{"x1", "x2", "x12"}, {"x13", "x23"}}, product({k1 + k2, k3})});
      out.push_back({2, {{"x2", "x3", "x23"}, {"x12", "x13"}}, product({k1, k2 + k3})});
      out.push_back({3, {{"x1", "x3", "x13"}, {"x12", "x23"}}, product({k1 + k3, k2})});
      out.push_back({4, {{"x12", "x13", "x23"}}, product({k1, k2, k3})});
      break;
    case Ansatz::TwoBlocks:
      out.push_back({1, {{"x1", "x2", "x12"}, {"x13", "x23"}}, product({k1 + k2, k3})});
      out.push_back({2, {{"x2", "x23"}, {"x12", "x13"}}, product({k1, k2 + k3})});
      out.push_back({3, {{"x1", "x13"}, {"x12", "x23"}}, product({k1 + k3, k2})});
      out.push_back({4, {{"x12", "x13", "x23"}}, product({k1, k2, k3})});
      break;
    case Ansatz::OneBlock:
      out.push_back({1, {{"x1", "x12"}, {"x13", "x23"}}, product({n - 1})});
      out.push_back({2, {{"x1", "x13"}, {"x12", "x23"}}, product({n - 1})});
      out.push_back({3, {{"x12", "x13"}}, product({n - 2, 2})});
      break;
  }
  return out;
}

Classification classify(const SolutionRecord& rec, const Decomposition& d) {
  if (!rec.witness) throw StructuralError("record has no witness");
  auto cases = reductive_cases(d);
  std::vector<const ReductiveCase*> open;
  for (const auto& c : cases) {
    auto h = holds(rec, c);
    if (h && *h) return {Kind::NaturallyReductive, c.id, c.subgroup};
    if (!h) open.push_back(&c);
  }
  if (open.empty()) return {Kind::NonNaturallyReductive, std::nullopt, std::nullopt};
  for (const auto* c : open)
    if (confirm_case(rec, d, *c)) return {Kind::NaturallyReductive, c->id, c->subgroup};
  return {Kind::Undecided, std::nullopt, std::nullopt};
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::string module_name(int i, int j) {
  if (i == j) return "x" + std::to_string(i);
  if (i > j) std::swap(i, j);
  return "x" + std::to_string(i) + std::to_string(j);
}

// Images of the scaled tuple under the isometries the decomposition admits.
std::vector<std::vector<Interval>> images(const SolutionRecord& rec, const Decomposition& d) {
  std::vector<std::vector<Interval>> out;
  auto ks = d.ks();
  std::array<int, 3> perm{1, 2, 3};
  std::sort(perm.begin(), perm.end());
  do {
    bool admissible = true;
    for (int i = 0; i < 3; ++i) admissible = admissible && ks[i] == ks[perm[i] - 1];
    if (!admissible || perm == std::array<int, 3>{1, 2, 3}) continue;
    std::vector<Interval> img(rec.scaled.size());
    for (int i = 1; i <= 3; ++i) {
      for (int j = i; j <= 3; ++j) {
        auto from = rec.index_of(module_name(i, j));
        auto to = rec.index_of(module_name(perm[i - 1], perm[j - 1]));
        if (from && to) img[*to] = rec.scaled[*from];
      }
    }
    out.push_back(std::move(img));
  } while (std::next_permutation(perm.begin(), perm.end()));

  // so(k1) and so(k2+k3) exchange roles when k1 = k2 + k3 and the metric is
  // bi-invariant on so(k2+k3) with equal cross terms.
  if (ks[0] == ks[1] + ks[2]) {
    ReductiveCase merged{2, {}, ""};
    std::vector<std::string> inner;
    for (const char* v : {"x2", "x3", "x23"})
      if (rec.index_of(v)) inner.push_back(v);
    merged.groups = {inner, {"x12", "x13"}};
    auto h = holds(rec, merged);
    // Boxes cannot show equalities; classify settled them through case 2.
    if (!h) h = rec.classification.case_id == 2;
    if (*h) {
      std::vector<Interval> img = rec.scaled;
      const Interval a = rec.scaled[*rec.index_of("x1")];
      const Interval b = rec.scaled[*rec.index_of("x23")];
      img[*rec.index_of("x1")] = b;
      for (const auto& v : inner) img[*rec.index_of(v)] = a;
      out.push_back(std::move(img));
    }
  }
  return out;
}

bool same_point(const std::vector<Interval>& a, const std::vector<Interval>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].overlaps(b[i])) return false;
  return true;
}

std::vector<double> midpoints(const std::vector<Interval>& v) {
  std::vector<double> out;
  for (const auto& x : v) out.push_back(to_double(x.midpoint()));
  return out;
}

}  // namespace

std::vector<SolutionRecord> dedup_isometry(std::vector<SolutionRecord>& records, const Decomposition& d) {
  const std::size_t n = records.size();
  for (const auto& r : records)
    if (r.scaled.empty()) throw StructuralError("dedup_isometry needs scaled records");
  DisjointSets sets(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j)
      if (same_point(records[i].scaled, records[j].scaled)) sets.unite(i, j);
    for (const auto& img : images(records[i], d))
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && same_point(img, records[j].scaled)) sets.unite(i, j);
  }
  // Representative: lexicographically smallest scaled tuple of each class.
  std::map<std::size_t, std::size_t> best;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t root = sets.find(i);
    auto it = best.find(root);
    if (it == best.end() || midpoints(records[i].scaled) < midpoints(records[it->second].scaled)) best[root] = i;
  }
  std::vector<std::size_t> reps;
  for (const auto& [root, i] : best) reps.push_back(i);
  std::sort(reps.begin(), reps.end(), [&](std::size_t a, std::size_t b) {
    return midpoints(records[a].scaled) < midpoints(records[b].scaled);
  });
  std::map<std::size_t, int> id;
  for (std::size_t c = 0; c < reps.size(); ++c) id[sets.find(reps[c])] = static_cast<int>(c);
  for (std::size_t i = 0; i < n; ++i) records[i].isometry_class = id[sets.find(i)];
  std::vector<SolutionRecord> out;
  for (std::size_t i : reps) out.push_back(records[i]);
  return out;
}

}  // namespace einso::einstein
