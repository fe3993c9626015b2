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

#include <Eigen/Dense>

#include <cmath>
#include <random>

#include "einso/einstein/solve.hpp"
#include "einso/exact/errors.hpp"

namespace einso::einstein {

namespace {

constexpr unsigned kBits = 256;

struct DoubleTerm {
  double coeff;
  std::vector<unsigned> exps;
};

struct DoublePoly {
  std::vector<DoubleTerm> terms;

  explicit DoublePoly(const MultiPoly& p) {
    for (const auto& t : p.terms()) {
      DoubleTerm d{to_double(t.coeff), {}};
      for (std::size_t i = 0; i < p.ring().size(); ++i) d.exps.push_back(t.monomial[i]);
      terms.push_back(std::move(d));
    }
  }
  // Value and the sum of absolute term values, for a relative residual.
  std::pair<double, double> eval(const Eigen::VectorXd& x) const {
    double v = 0, mag = 0;
    for (const auto& t : terms) {
      double m = t.coeff;
      for (std::size_t i = 0; i < t.exps.size(); ++i)
        for (unsigned e = 0; e < t.exps[i]; ++e) m *= x[static_cast<Eigen::Index>(i)];
      v += m;
      mag += std::abs(m);
    }
    return {v, mag};
  }
};

MultiPoly partial(const MultiPoly& p, std::size_t var) {
  std::vector<MultiPoly::Term> terms;
  for (const auto& t : p.terms()) {
    unsigned e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    terms.push_back({m, t.coeff * Rational(e)});
  }
  return MultiPoly::from_terms(p.ring_ptr(), std::move(terms));
}

struct Model {
  std::size_t m;
  std::vector<MultiPoly> f;
  std::vector<std::vector<MultiPoly>> jac;
  std::vector<DoublePoly> fd;
  std::vector<std::vector<DoublePoly>> jd;

  explicit Model(const EinsteinSystem& sys) : m(sys.ring->size()), f(sys.polynomials) {
    for (const auto& p : f) {
      fd.emplace_back(p);
      jac.emplace_back();
      jd.emplace_back();
      for (std::size_t j = 0; j < m; ++j) {
        jac.back().push_back(partial(p, j));
        jd.back().emplace_back(jac.back().back());
      }
    }
  }

  // Residual scaled by term magnitudes.
  Eigen::VectorXd residual(const Eigen::VectorXd& x, double* rel) const {
    Eigen::VectorXd r(static_cast<Eigen::Index>(f.size()));
    double worst = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      auto [v, mag] = fd[i].eval(x);
      r[static_cast<Eigen::Index>(i)] = v;
      worst = std::max(worst, std::abs(v) / std::max(mag, 1e-300));
    }
    if (rel) *rel = worst;
    return r;
  }

  Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const {
    Eigen::MatrixXd j(static_cast<Eigen::Index>(f.size()), static_cast<Eigen::Index>(m));
    for (std::size_t a = 0; a < f.size(); ++a)
      for (std::size_t b = 0; b < m; ++b)
        j(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = jd[a][b].eval(x).first;
    return j;
  }
};

std::optional<Eigen::VectorXd> newton(const Model& model, Eigen::VectorXd x, int max_iter) {
  double rel = 0;
  Eigen::VectorXd r = model.residual(x, &rel);
  for (int it = 0; it < max_iter; ++it) {
    Eigen::MatrixXd j = model.jacobian(x);
    Eigen::VectorXd dx = j.colPivHouseholderQr().solve(-r);
    if (!dx.allFinite()) return std::nullopt;
    double t = 1.0, norm = r.norm();
    Eigen::VectorXd xn, rn;
    double reln = 0;
    while (true) {
      xn = x + t * dx;
      rn = model.residual(xn, &reln);
      if (rn.allFinite() && rn.norm() <= (1 - t / 4) * norm) break;
      t /= 2;
      if (t < 1e-6) break;
    }
    bool small_step = (t * dx).cwiseAbs().maxCoeff() <= 1e-15 * (1 + x.cwiseAbs().maxCoeff());
    x = xn;
    r = rn;
    rel = reln;
    if (!x.allFinite() || x.cwiseAbs().maxCoeff() > 1e9) return std::nullopt;
    if (rel < 1e-13 || (small_step && rel < 1e-9)) return x;
  }
  if (rel < 1e-9) return x;
  return std::nullopt;
}

using RMatrix = std::vector<std::vector<Rational>>;

std::vector<Rational> exact_residual(const Model& model, const std::vector<Rational>& y) {
  std::vector<Rational> out;
  for (const auto& p : model.f) out.push_back(p.evaluate(y));
  return out;
}

// Krawczyk test on the box y +- radius; returns the contracted box on success.
std::optional<std::vector<Interval>> krawczyk(const Model& model, const std::vector<Rational>& y,
                                              const RMatrix& inv, const Rational& radius) {
  const std::size_t m = model.m;
  std::vector<Interval> box, dev;
  for (std::size_t i = 0; i < m; ++i) {
    Rational r = radius * std::max(Rational(1), Rational(abs(y[i])));
    box.push_back({y[i] - r, y[i] + r});
    dev.push_back({-r, r});
  }
  auto fy = exact_residual(model, y);
  std::vector<std::vector<Interval>> jx(m, std::vector<Interval>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) jx[a][b] = evaluate(model.jac[a][b], box, kBits);
  std::vector<Interval> out;
  for (std::size_t i = 0; i < m; ++i) {
    Rational c = y[i];
    for (std::size_t k = 0; k < m; ++k) c -= inv[i][k] * fy[k];
    Interval acc = Interval::point(c);
    for (std::size_t j = 0; j < m; ++j) {
      Interval e = Interval::point(Rational(i == j ? 1 : 0));
      for (std::size_t k = 0; k < m; ++k) e = e - jx[k][j] * inv[i][k];
      acc = widen_to_dyadic(acc + e * dev[j], kBits);
    }
    if (!(box[i].lo < acc.lo && acc.hi < box[i].hi)) return std::nullopt;
    out.push_back(acc);
  }
  return out;
}

// Tightens a double root with exact simplified Newton steps, then certifies.
std::optional<std::vector<Interval>> certify(const Model& model, const Eigen::VectorXd& x) {
  const std::size_t m = model.m;
  if (model.f.size() != m || m == 0) return std::nullopt;
  Eigen::MatrixXd j = model.jacobian(x);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(j);
  if (!lu.isInvertible()) return std::nullopt;
  Eigen::MatrixXd yinv = lu.inverse();
  RMatrix inv(m, std::vector<Rational>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      double v = yinv(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
      if (!std::isfinite(v)) return std::nullopt;
      inv[a][b] = from_double(v);
    }
  std::vector<Rational> y;
  for (std::size_t i = 0; i < m; ++i) y.push_back(from_double(x[static_cast<Eigen::Index>(i)]));
  for (int step = 0; step < 12; ++step) {
    auto fy = exact_residual(model, y);
    for (std::size_t i = 0; i < m; ++i) {
      Rational c = y[i];
      for (std::size_t k = 0; k < m; ++k) c -= inv[i][k] * fy[k];
      y[i] = round_down(c, kBits);
    }
  }
  for (int e : {120, 100, 80, 60, 40}) {
    Rational radius(Integer(1), Integer(1) << e);
    if (auto box = krawczyk(model, y, inv, radius)) return box;
  }
  return std::nullopt;
}

}  // namespace

std::vector<SolutionRecord> solve_numeric(const EinsteinSystem& sys, const NumericOptions& opt) {
  if (opt.starts < 1) throw StructuralError("starts must be positive");
  Model model(sys);
  const std::size_t m = model.m;
  const RingPtr& metric_ring = sys.ricci.ring;
  std::vector<Eigen::VectorXd> found;

  if (m > 0) {
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> logu(std::log(1e-2), std::log(1e2));
    for (int s = 0; s < opt.starts; ++s) {
      Eigen::VectorXd x(static_cast<Eigen::Index>(m));
      for (std::size_t i = 0; i < m; ++i) x[static_cast<Eigen::Index>(i)] = std::exp(logu(rng));
      auto sol = newton(model, x, opt.max_iterations);
      if (!sol || sol->minCoeff() <= 1e-9) continue;
      bool dup = false;
      for (const auto& f : found) {
        double scale = std::max(1.0, f.cwiseAbs().maxCoeff());
        dup = dup || (f - *sol).cwiseAbs().maxCoeff() <= opt.cluster_tol * scale;
      }
      if (!dup) found.push_back(*sol);
    }
  } else {
    bool consistent = std::all_of(sys.polynomials.begin(), sys.polynomials.end(),
                                  [](const MultiPoly& p) { return p.is_zero(); });
    if (consistent) found.emplace_back(0);
  }

  std::sort(found.begin(), found.end(), [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
  });

  std::vector<SolutionRecord> out;
  for (const auto& x : found) {
    std::vector<Interval> box;
    bool certified = false;
    if (m == 0) {
      certified = true;
    } else if (auto b = certify(model, x)) {
      box = std::move(*b);
      certified = true;
    } else {
      for (std::size_t i = 0; i < m; ++i) {
        Rational c = from_double(x[static_cast<Eigen::Index>(i)]);
        Rational r = from_double(1e-8 * std::max(1.0, std::abs(x[static_cast<Eigen::Index>(i)])));
        box.push_back({c - r, c + r});
      }
    }
    std::vector<Interval> coords;
    for (const auto& name : metric_ring->names()) coords.push_back(evaluate(sys.metric.at(name), box, kBits));
    if (std::any_of(coords.begin(), coords.end(), [](const Interval& v) { return v.lo <= 0; })) continue;
    SolutionRecord rec;
    rec.k = sys.decomposition.ks();
    rec.variables = metric_ring->names();
    rec.coords = coords;
    rec.status = Status::NumericOnly;
    rec.certified = certified;
    rec.witness = std::make_shared<BoxWitness>(metric_ring, coords, certified);
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace einso::einstein
