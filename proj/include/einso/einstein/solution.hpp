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

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "einso/exact/multipoly.hpp"
#include "einso/realroots/sturm.hpp"
#include "einso/realroots/upoly.hpp"

namespace einso::einstein {

using realroots::Interval;
using realroots::UPoly;

/// Narrowest enclosure the numeric witnesses guarantee before declaring an
/// equality undecidable.
Rational tolerance_floor();

/// Certified evaluation of p over a box indexed like p's ring.
Interval evaluate(const MultiPoly& p, std::span<const Interval> box, unsigned bits = 0);

/// p with each ring variable replaced by values[i], reduced modulo m.
UPoly compose_mod(const MultiPoly& p, const std::vector<UPoly>& values, const UPoly& m);

/// A solution point that can be enclosed to any width and queried for exact
/// polynomial relations.
class Witness {
 public:
  virtual ~Witness() = default;
  /// The metric ring all queries refer to.
  virtual const RingPtr& ring() const = 0;
  /// Enclosures of every metric variable, each no wider than `width` when
  /// the witness can refine that far.
  virtual std::vector<Interval> enclose(const Rational& width) const = 0;
  /// Whether f vanishes at the point; nullopt when undecidable.
  virtual std::optional<bool> vanishes(const MultiPoly& f) const = 0;
  virtual bool exact() const = 0;
};

/// Point whose coordinates are polynomials in one real root of a
/// square-free polynomial.
class AlgebraicWitness : public Witness {
 public:
  AlgebraicWitness(RingPtr ring, UPoly minpoly, realroots::IsolatingInterval root,
                   std::vector<UPoly> coords);

  const RingPtr& ring() const override { return ring_; }
  std::vector<Interval> enclose(const Rational& width) const override;
  std::optional<bool> vanishes(const MultiPoly& f) const override;
  bool exact() const override { return true; }

  const UPoly& minpoly() const { return minpoly_; }
  const realroots::IsolatingInterval& root() const { return root_; }
  const std::vector<UPoly>& coordinates() const { return coords_; }
  /// Sign of f at the point, decided exactly.
  int sign(const MultiPoly& f) const;
  /// Value of coordinate i when it is rational.
  std::optional<Rational> rational_coordinate(std::size_t i) const { return rational_.at(i); }

 private:
  bool root_of(const UPoly& f) const;
  int sign_of(const UPoly& f) const;
  std::optional<Rational> detect_rational(std::size_t i) const;

  RingPtr ring_;
  UPoly minpoly_;
  realroots::IsolatingInterval root_;
  std::vector<UPoly> coords_;
  std::vector<std::optional<Rational>> rational_;
};

/// Point known through a box, optionally certified to hold exactly one
/// solution of a square polynomial system.
class BoxWitness : public Witness {
 public:
  BoxWitness(RingPtr ring, std::vector<Interval> box, bool certified);

  const RingPtr& ring() const override { return ring_; }
  std::vector<Interval> enclose(const Rational& width) const override;
  std::optional<bool> vanishes(const MultiPoly& f) const override;
  bool exact() const override { return false; }
  bool certified() const { return certified_; }
  const std::vector<Interval>& box() const { return box_; }

 private:
  RingPtr ring_;
  std::vector<Interval> box_;
  bool certified_;
};

enum class Kind { NaturallyReductive, NonNaturallyReductive, Undecided };

struct Classification {
  Kind kind = Kind::Undecided;
  std::optional<int> case_id;
  std::optional<std::string> subgroup;
};

enum class Status { Exact, NumericOnly };

std::string to_string(Kind k);
std::string to_string(Status s);

struct SolutionRecord {
  std::array<int, 3> k{};
  /// Metric variables in ring order with their enclosures.
  std::vector<std::string> variables;
  std::vector<Interval> coords;
  std::vector<Interval> scaled;
  Interval einstein_constant;
  Classification classification;
  int isometry_class = -1;
  Status status = Status::NumericOnly;
  /// Numeric records only: a box certified to hold a unique solution.
  bool certified = false;
  std::shared_ptr<const Witness> witness;

  std::optional<std::size_t> index_of(const std::string& var) const;
  double approx(const std::string& var) const;
  double approx_scaled(const std::string& var) const;
};

}  // namespace einso::einstein
