// Copyright 2026 The kstab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kstab/cones.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "kstab/curves.hpp"
#include "kstab/error.hpp"
#include "kstab/ratlp.hpp"

namespace kstab {
namespace {

// Coordinate k of a class: 0 is h, k >= 1 is e_{k-1}.
const Rational& coord(const DivClass& c, std::size_t k) {
  return k == 0 ? c.h() : c.e(k - 1);
}

// Coefficient vector of y -> c.y in coordinates (h, e_1..e_r).
std::vector<Rational> form_row(const DivClass& c) {
  std::vector<Rational> row;
  row.push_back(c.h());
  for (const auto& x : c.e()) row.push_back(-x);
  return row;
}

bool exists_section(const std::vector<DivClass>& curves, const DivClass& c,
                    const std::vector<DivClass>& chosen, const SurfaceModel& s) {
  return std::any_of(curves.begin(), curves.end(), [&](const DivClass& v) {
    if (intersect(v, c, s) != Rational(1)) return false;
    return std::all_of(chosen.begin(), chosen.end(), [&](const DivClass& e) {
      return intersect(v, e, s).is_zero();
    });
  });
}

// Sort (a_i, E_i) pairs by a descending; ties keep enumeration order.
void sort_pairs(ContractionData& cd) {
  std::vector<std::size_t> order(cd.a.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return cd.a[i] > cd.a[j]; });
  std::vector<Rational> a;
  std::vector<DivClass> e;
  for (auto i : order) {
    a.push_back(cd.a[i]);
    e.push_back(cd.curve_e[i]);
  }
  cd.a = std::move(a);
  cd.curve_e = std::move(e);
}

// a_i = -D.E_i on an orthogonal set of (-1)-curves; nullopt if negative.
std::optional<std::vector<Rational>> coefficients(const DivClass& d,
                                                  const std::vector<DivClass>& es,
                                                  const SurfaceModel& s) {
  std::vector<Rational> a;
  for (const auto& e : es) {
    Rational x = -intersect(d, e, s);
    if (x.sign() < 0) return std::nullopt;
    a.push_back(std::move(x));
  }
  return a;
}

}  // namespace

const std::vector<DivClass>& mori_generators(const SurfaceModel& s) {
  if (s.degree() <= 7) return minus_one_curves(s);
  static const std::vector<DivClass> degree8 = [] {
    const SurfaceModel p(8);
    return std::vector<DivClass>{p.exceptional(0), p.line() - p.exceptional(0)};
  }();
  return degree8;
}

bool is_nef(const DivClass& dv, const SurfaceModel& s) {
  s.check(dv);
  const auto& gens = mori_generators(s);
  return std::all_of(gens.begin(), gens.end(), [&](const DivClass& g) {
    return intersect(dv, g, s).sign() >= 0;
  });
}

bool is_nef_dual(const DivClass& dv, const SurfaceModel& s) {
  s.check(dv);
  const auto& gens = mori_generators(s);
  const std::size_t dim = s.rank() + 1;
  const std::size_t n = dim + gens.size();

  LinearProgram lp;
  lp.objective = form_row(dv);
  lp.objective.resize(n);
  lp.bounds.assign(dim, VarBound::Free);
  lp.bounds.resize(n, VarBound::NonNegative);
  for (std::size_t k = 0; k < dim; ++k) {
    std::vector<Rational> row(n);
    row[k] = Rational(1);
    for (std::size_t i = 0; i < gens.size(); ++i) row[dim + i] = -coord(gens[i], k);
    lp.add_row(std::move(row), Sense::Equal, Rational(0));
  }
  auto slice = form_row(s.anticanonical());
  slice.resize(n);
  lp.add_row(std::move(slice), Sense::Equal, Rational(1));

  const auto res = solve(lp);
  if (res.status != LpStatus::Optimal) {
    throw InvariantViolation("nef slice program is not bounded and feasible");
  }
  return res.value.sign() >= 0;
}

std::optional<DivClass> ampleness_witness(const DivClass& dv, const SurfaceModel& s) {
  s.check(dv);
  for (const auto& g : mori_generators(s)) {
    if (intersect(dv, g, s).sign() <= 0) return g;
  }
  return std::nullopt;
}

bool is_ample(const DivClass& dv, const SurfaceModel& s) {
  return !ampleness_witness(dv, s) && square(dv, s).sign() > 0;
}

Rational mu(const DivClass& l, const SurfaceModel& s) {
  if (!is_ample(l, s)) throw DomainError("mu: class " + l.to_string() + " is not ample");
  const auto& gens = mori_generators(s);
  const DivClass k = canonical(s);
  const std::size_t n = 1 + gens.size();

  // minimize lambda  s.t.  lambda*l - sum t_i*G_i = -K,  lambda, t >= 0
  LinearProgram lp;
  lp.objective.assign(n, Rational(0));
  lp.objective[0] = Rational(1);
  lp.bounds.assign(n, VarBound::NonNegative);
  for (std::size_t c = 0; c <= s.rank(); ++c) {
    std::vector<Rational> row(n);
    row[0] = coord(l, c);
    for (std::size_t i = 0; i < gens.size(); ++i) row[1 + i] = -coord(gens[i], c);
    lp.add_row(std::move(row), Sense::Equal, -coord(k, c));
  }
  const auto res = solve(lp);
  if (res.status != LpStatus::Optimal) {
    throw InvariantViolation("mu program for an ample class is not optimal");
  }
  return res.value;
}

std::string to_string(ContractionKind kind) {
  switch (kind) {
    case ContractionKind::ToP2:
      return "ToP2";
    case ContractionKind::ConicBundleF1:
      return "ConicBundleF1";
    case ContractionKind::ConicBundleP1P1:
      return "ConicBundleP1P1";
  }
  return "?";
}

DivClass reconstruct(const ContractionData& cd, const SurfaceModel& s) {
  DivClass out = s.anticanonical();
  if (cd.curve_c) out += cd.delta * *cd.curve_c;
  for (std::size_t i = 0; i < cd.a.size(); ++i) out += cd.a[i] * cd.curve_e.at(i);
  return out;
}

void validate(const ContractionData& cd, const SurfaceModel& s) {
  const std::size_t r = s.rank();
  const bool bundle = cd.kind != ContractionKind::ToP2;
  if (s.degree() > 7) throw DomainError("contraction data needs degree <= 7");
  if (cd.a.size() != cd.curve_e.size()) throw DomainError("contraction data: a/curve count mismatch");
  if (cd.a.size() != (bundle ? r - 1 : r)) {
    throw DomainError("contraction data: wrong number of curves for " + to_string(cd.kind));
  }
  if (cd.delta.sign() < 0) throw DomainError("contraction data: delta < 0");
  if (!bundle && (!cd.delta.is_zero() || cd.curve_c)) {
    throw DomainError("contraction data: ToP2 carries no fiber and delta = 0");
  }
  if (bundle && !cd.curve_c) throw DomainError("contraction data: conic bundle without fiber");
  for (std::size_t i = 0; i < cd.a.size(); ++i) {
    if (cd.a[i].sign() < 0) throw DomainError("contraction data: negative coefficient");
    if (cd.a[i] >= Rational(1)) throw DomainError("contraction data: a_i >= 1");
    if (i > 0 && cd.a[i] > cd.a[i - 1]) throw DomainError("contraction data: a not sorted");
  }
  const DivClass anti = s.anticanonical();
  for (std::size_t i = 0; i < cd.curve_e.size(); ++i) {
    const auto& e = cd.curve_e[i];
    s.check(e);
    if (!e.is_integral() || square(e, s) != Rational(-1) || intersect(anti, e, s) != Rational(1)) {
      throw DomainError("contraction data: " + e.to_string() + " is not a (-1)-curve");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!intersect(e, cd.curve_e[j], s).is_zero()) {
        throw DomainError("contraction data: curves are not disjoint");
      }
    }
  }
  if (bundle) {
    const auto& c = *cd.curve_c;
    s.check(c);
    if (!c.is_integral() || !square(c, s).is_zero() || intersect(anti, c, s) != Rational(2)) {
      throw DomainError("contraction data: " + c.to_string() + " is not a fiber class");
    }
    for (const auto& e : cd.curve_e) {
      if (!intersect(c, e, s).is_zero()) {
        throw DomainError("contraction data: fiber meets a contracted curve");
      }
    }
    const bool f1 = exists_section(minus_one_curves(s), c, cd.curve_e, s);
    if (f1 != (cd.kind == ContractionKind::ConicBundleF1)) {
      throw DomainError("contraction data: kind does not match the configuration");
    }
  }
}

ContractionData standard_contraction(const SurfaceModel& s, ContractionKind kind,
                                     std::vector<Rational> a, Rational delta) {
  if (s.degree() > 7) throw DomainError("standard_contraction needs degree <= 7");
  const std::size_t r = s.rank();
  ContractionData cd;
  cd.kind = kind;
  cd.a = std::move(a);
  cd.delta = std::move(delta);
  switch (kind) {
    case ContractionKind::ToP2:
      for (std::size_t i = 0; i < r; ++i) cd.curve_e.push_back(s.exceptional(i));
      break;
    case ContractionKind::ConicBundleF1:
      for (std::size_t i = 0; i + 1 < r; ++i) cd.curve_e.push_back(s.exceptional(i));
      cd.curve_c = s.line() - s.exceptional(r - 1);
      break;
    case ContractionKind::ConicBundleP1P1:
      cd.curve_e.push_back(s.line() - s.exceptional(0) - s.exceptional(1));
      for (std::size_t i = 2; i < r; ++i) cd.curve_e.push_back(s.exceptional(i));
      cd.curve_c = s.line() - s.exceptional(0);
      break;
  }
  validate(cd, s);
  return cd;
}

ContractionData face_decompose(const DivClass& l, const SurfaceModel& s) {
  if (s.degree() > 7) throw DomainError("face_decompose needs degree <= 7");
  const Rational m = mu(l, s);
  if (m != Rational(1)) {
    throw DomainError("face_decompose: mu = " + m.to_string() + ", rescale the class first");
  }
  const DivClass d = canonical(s) + l;
  const std::size_t r = s.rank();
  // A contracted curve E carries a = -d.E >= 0. Filtering keeps the
  // enumeration order, so the lexicographically least set is unchanged.
  std::vector<DivClass> curves;
  for (const auto& e : minus_one_curves(s)) {
    if (intersect(d, e, s).sign() <= 0) curves.push_back(e);
  }

  std::optional<ContractionData> found;
  for_each_disjoint_set(curves, r, s, [&](std::span<const std::size_t> set) {
    std::vector<DivClass> es;
    for (auto i : set) es.push_back(curves[i]);
    auto a = coefficients(d, es, s);
    if (!a) return true;
    DivClass sum = DivClass::zero(r);
    for (std::size_t i = 0; i < es.size(); ++i) sum += (*a)[i] * es[i];
    if (sum != d) return true;
    found = ContractionData{ContractionKind::ToP2, Rational(0), std::move(*a), std::move(es), {}};
    return false;
  });

  if (!found) {
    const auto& fibers = fiber_classes(s);
    const DivClass anti = s.anticanonical();
    for_each_disjoint_set(curves, r - 1, s, [&](std::span<const std::size_t> set) {
      std::vector<DivClass> es;
      for (auto i : set) es.push_back(curves[i]);
      auto a = coefficients(d, es, s);
      if (!a) return true;
      const Rational asum = std::accumulate(a->begin(), a->end(), Rational(0));
      for (const auto& c : fibers) {
        const bool orthogonal = std::all_of(es.begin(), es.end(), [&](const DivClass& e) {
          return intersect(c, e, s).is_zero();
        });
        if (!orthogonal) continue;
        const Rational delta = (intersect(anti, d, s) - asum) / Rational(2);
        if (delta.sign() < 0) continue;
        DivClass sum = delta * c;
        for (std::size_t i = 0; i < es.size(); ++i) sum += (*a)[i] * es[i];
        if (sum != d) continue;
        const auto kind = exists_section(minus_one_curves(s), c, es, s) ? ContractionKind::ConicBundleF1
                                                           : ContractionKind::ConicBundleP1P1;
        found = ContractionData{kind, delta, std::move(*a), std::move(es), c};
        return false;
      }
      return true;
    });
  }

  if (!found) {
    throw InvariantViolation("no normal form found for " + l.to_string() +
                             " although mu = 1");
  }
  sort_pairs(*found);
  try {
    validate(*found, s);
  } catch (const DomainError& err) {
    throw InvariantViolation(std::string("normal form breaks an invariant: ") + err.what());
  }
  if (reconstruct(*found, s) != l) {
    throw InvariantViolation("normal form does not reconstruct " + l.to_string());
  }
  return *found;
}

}  // namespace kstab
