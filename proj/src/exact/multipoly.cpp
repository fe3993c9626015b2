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

#include "einso/exact/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "einso/exact/errors.hpp"

namespace einso {

namespace {

bool valid_name(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// Canonical storage order: lex with variable 0 largest.
int canonical_compare(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

bool canonical_greater(const MultiPoly::Term& a, const MultiPoly::Term& b) {
  return canonical_compare(a.monomial, b.monomial) > 0;
}

void require_same_ring(const MultiPoly& a, const MultiPoly& b) {
  if (a.ring_ptr() != b.ring_ptr() && !(a.ring() == b.ring())) {
    throw StructuralError("polynomials belong to different rings");
  }
}

std::vector<MultiPoly::Term> merge(const std::vector<MultiPoly::Term>& a,
                                   const std::vector<MultiPoly::Term>& b, bool subtract) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = canonical_compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(subtract ? MultiPoly::Term{b[j].monomial, -b[j].coeff} : b[j]);
      ++j;
    } else {
      Rational s = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (s != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

std::string monomial_text(const Monomial& m, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!out.empty()) out += "*";
    out += ring.name(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, RingPtr ring) : s_(text), ring_(std::move(ring)) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw StructuralError("polynomial parse error at " + std::to_string(pos_) + ": " + what +
                          " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  MultiPoly expr() {
    MultiPoly acc(ring_);
    bool first = true;
    for (;;) {
      char c = peek();
      bool neg = false;
      if (c == '+' || c == '-') {
        neg = c == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      MultiPoly t = term();
      if (neg) acc -= t;
      else acc += t;
      first = false;
    }
    return acc;
  }

  bool starts_primary(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '(';
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '/') {
        ++pos_;
        MultiPoly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc *= Rational(1 / d.constant_term());
      } else if (starts_primary(c)) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly factor() {
    MultiPoly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
      base = base.pow(e);
    }
    return base;
  }

  MultiPoly primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      return MultiPoly::constant(ring_, parse_rational(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(s_.substr(start, pos_ - start));
      if (!ring_->index_of(name)) fail("unknown variable '" + name + "'");
      return MultiPoly::variable(ring_, name);
    }
    fail("expected a number, variable or '('");
  }

  std::string_view s_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars) throw StructuralError("too many ring variables");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_name(n)) throw StructuralError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw StructuralError("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Ring::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw StructuralError("unknown variable '" + std::string(name) + "'");
}

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

namespace {
std::vector<std::size_t> precedence_indices(const Ring& ring, std::span<const std::string> precedence) {
  if (precedence.size() != ring.size()) throw StructuralError("precedence must list every ring variable");
  std::vector<std::size_t> idx;
  for (const auto& n : precedence) idx.push_back(ring.require(n));
  return idx;
}
}  // namespace

MonomialOrder lex_order(const Ring& ring, std::span<const std::string> precedence) {
  return MonomialOrder(OrderKind::Lex, precedence_indices(ring, precedence));
}

MonomialOrder grevlex_order(const Ring& ring, std::span<const std::string> precedence) {
  return MonomialOrder(OrderKind::GrevLex, precedence_indices(ring, precedence));
}

MultiPoly::MultiPoly(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw StructuralError("null ring");
}

MultiPoly MultiPoly::constant(RingPtr ring, const Rational& c) {
  MultiPoly p(std::move(ring));
  if (c != 0) p.terms_.push_back({Monomial(p.ring_->size()), c});
  return p;
}

MultiPoly MultiPoly::variable(RingPtr ring, std::string_view name) {
  MultiPoly p(std::move(ring));
  Monomial m(p.ring_->size());
  m.set(p.ring_->require(name), 1);
  p.terms_.push_back({m, Rational(1)});
  return p;
}

MultiPoly MultiPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
  MultiPoly p(std::move(ring));
  for (const auto& t : terms) {
    if (t.monomial.size() != p.ring_->size()) throw StructuralError("monomial length does not match ring");
  }
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void MultiPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), canonical_greater);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms_ = std::move(out);
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

Rational MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return Rational(0);
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

std::vector<std::size_t> MultiPoly::variables() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < ring_->size(); ++v) {
    for (const auto& t : terms_) {
      if (t.monomial[v]) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

bool MultiPoly::involves_only(std::span<const std::size_t> vars) const {
  for (std::size_t v : variables()) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) return false;
  }
  return true;
}

const MultiPoly::Term& MultiPoly::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw StructuralError("zero polynomial has no leading term");
  const Term* best = &terms_[0];
  for (const auto& t : terms_) {
    if (order.compare(t.monomial, best->monomial) > 0) best = &t;
  }
  return *best;
}

std::vector<MultiPoly::Term> MultiPoly::sorted_terms(const MonomialOrder& order) const {
  std::vector<Term> out = terms_;
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.monomial, b.monomial) > 0; });
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_ring(*this, o);
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_ring(*this, o);
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(a, b);
  MultiPoly r(a.ring_);
  if (a.is_zero() || b.is_zero()) return r;
  r.terms_.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) r.terms_.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  }
  r.normalize();
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

MultiPoly MultiPoly::mul_term(const Monomial& m, const Rational& c) const {
  MultiPoly r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves any term order.
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coeff * c});
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(ring_, 1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (!(a.ring() == b.ring()) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& point) const {
  std::vector<Rational> values(ring_->size());
  std::vector<bool> have(ring_->size(), false);
  for (const auto& [name, value] : point) {
    if (auto i = ring_->index_of(name)) {
      values[*i] = value;
      have[*i] = true;
    }
  }
  for (std::size_t v : variables()) {
    if (!have[v]) throw StructuralError("no value assigned to variable '" + ring_->name(v) + "'");
  }
  return evaluate(values);
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_->size()) throw StructuralError("point dimension does not match ring");
  // Power cache per variable keeps this linear in the number of terms.
  std::vector<std::vector<Rational>> powers(ring_->size());
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational term = t.coeff;
    for (std::size_t v = 0; v < ring_->size(); ++v) {
      unsigned e = t.monomial[v];
      if (!e) continue;
      auto& pw = powers[v];
      if (pw.empty()) pw.push_back(Rational(1));
      while (pw.size() <= e) pw.push_back(pw.back() * point[v]);
      term *= pw[e];
    }
    sum += term;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& bindings, RingPtr target) const {
  std::vector<std::optional<MultiPoly>> images(ring_->size());
  for (const auto& [name, image] : bindings) {
    std::size_t i = ring_->require(name);
    if (!(image.ring() == *target)) throw StructuralError("binding for '" + name + "' is not over the target ring");
    images[i] = image;
  }
  for (std::size_t v = 0; v < ring_->size(); ++v) {
    if (!images[v]) {
      bool used = false;
      for (const auto& t : terms_) used = used || t.monomial[v] != 0;
      if (used) images[v] = MultiPoly::variable(target, ring_->name(v));
    }
  }
  std::vector<std::vector<MultiPoly>> powers(ring_->size());
  MultiPoly result(target);
  for (const auto& t : terms_) {
    MultiPoly term = MultiPoly::constant(target, t.coeff);
    for (std::size_t v = 0; v < ring_->size(); ++v) {
      unsigned e = t.monomial[v];
      if (!e) continue;
      auto& pw = powers[v];
      if (pw.empty()) pw.push_back(MultiPoly::constant(target, 1));
      while (pw.size() <= e) pw.push_back(pw.back() * *images[v]);
      term = term * pw[e];
    }
    result += term;
  }
  return result;
}

MultiPoly MultiPoly::to_ring(RingPtr target) const {
  std::vector<std::optional<std::size_t>> map(ring_->size());
  for (std::size_t v = 0; v < ring_->size(); ++v) map[v] = target->index_of(ring_->name(v));
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->size());
    for (std::size_t v = 0; v < ring_->size(); ++v) {
      if (!t.monomial[v]) continue;
      if (!map[v]) throw StructuralError("variable '" + ring_->name(v) + "' missing from target ring");
      m.set(*map[v], t.monomial[v]);
    }
    out.push_back({m, t.coeff});
  }
  return from_terms(std::move(target), std::move(out));
}

std::string MultiPoly::to_string() const { return to_string(MonomialOrder::lex(ring_->size())); }

std::string MultiPoly::to_string(const MonomialOrder& order) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : sorted_terms(order)) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_text(t.monomial, *ring_);
    if (mono.empty()) {
      out += einso::to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += einso::to_string(c) + "*" + mono;
    }
  }
  return out;
}

std::pair<Rational, MultiPoly> content_primitive(const MultiPoly& p, const MonomialOrder& order) {
  if (p.is_zero()) return {Rational(0), p};
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& t : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  if (p.leading_term(order).coeff < 0) content = -content;
  MultiPoly prim = p * Rational(1 / content);
  return {content, prim};
}

std::pair<Rational, MultiPoly> content_primitive(const MultiPoly& p) {
  return content_primitive(p, MonomialOrder::lex(p.ring().size()));
}

Monomial monomial_content(const MultiPoly& p) {
  if (p.is_zero()) return Monomial(p.ring().size());
  Monomial g = p.terms().front().monomial;
  for (const auto& t : p.terms()) g = gcd(g, t.monomial);
  return g;
}

MultiPoly divide_monomial(const MultiPoly& p, const Monomial& m) {
  std::vector<MultiPoly::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({t.monomial / m, t.coeff});
  return MultiPoly::from_terms(p.ring_ptr(), std::move(out));
}

std::vector<Rational> to_univariate(const MultiPoly& p, std::string_view var) {
  std::size_t v = p.ring().require(var);
  std::vector<Rational> out;
  for (const auto& t : p.terms()) {
    for (std::size_t w = 0; w < p.ring().size(); ++w) {
      if (w != v && t.monomial[w]) {
        throw StructuralError("polynomial involves '" + p.ring().name(w) + "', not only '" + std::string(var) + "'");
      }
    }
    unsigned e = t.monomial[v];
    if (out.size() <= e) out.resize(e + 1);
    out[e] += t.coeff;
  }
  if (out.empty()) out.push_back(Rational(0));
  return out;
}

MultiPoly from_univariate(RingPtr ring, std::string_view var, std::span<const Rational> coeffs) {
  std::size_t v = ring->require(var);
  std::vector<MultiPoly::Term> terms;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    if (coeffs[e] == 0) continue;
    Monomial m(ring->size());
    m.set(v, static_cast<unsigned>(e));
    terms.push_back({m, coeffs[e]});
  }
  return MultiPoly::from_terms(std::move(ring), std::move(terms));
}

MultiPoly parse_poly(std::string_view text, RingPtr ring) { return Parser(text, std::move(ring)).parse(); }

bool equal_up_to_scalar(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (!(a.ring() == b.ring()) || a.size() != b.size()) return false;
  Rational ratio = a.terms().front().coeff / b.terms().front().coeff;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a.terms()[i].monomial == b.terms()[i].monomial)) return false;
    if (a.terms()[i].coeff != ratio * b.terms()[i].coeff) return false;
  }
  return true;
}

}  // namespace einso
