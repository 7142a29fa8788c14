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

#ifndef KSTAB_TESTS_ORACLES_HPP_
#define KSTAB_TESTS_ORACLES_HPP_

// Independent reference implementations used by the unit tests and the
// acceptance binary. Deliberately naive.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "kstab/cones.hpp"
#include "kstab/curves.hpp"
#include "kstab/lattice.hpp"
#include "kstab/rational.hpp"
#include "kstab/ratlp.hpp"

namespace kstab::oracle {

inline Rational random_rational(std::mt19937_64& rng, long max_abs_num, long max_den) {
  std::uniform_int_distribution<long> num(-max_abs_num, max_abs_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline DivClass random_class(std::mt19937_64& rng, const SurfaceModel& s, long max_abs_num,
                             long max_den) {
  std::vector<Rational> e;
  for (std::size_t i = 0; i < s.rank(); ++i) e.push_back(random_rational(rng, max_abs_num, max_den));
  return DivClass(random_rational(rng, max_abs_num, max_den), std::move(e));
}

// Ample classes of two shapes: small perturbations of -K, and -K plus a
// random nonnegative combination of a few (-1)-curves (mu usually < 1).
inline DivClass random_ample(std::mt19937_64& rng, const SurfaceModel& s) {
  const auto& gens = mori_generators(s);
  std::uniform_int_distribution<int> shape(0, 1);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<long> num(0, 9);
  std::uniform_int_distribution<long> den(1, 7);
  std::uniform_int_distribution<long> scale(1, 5);
  for (;;) {
    DivClass l = s.anticanonical();
    if (shape(rng) == 0) {
      l += random_class(rng, s, 1, 6);
    } else {
      const int terms = 1 + static_cast<int>(pick(rng) % 3);
      for (int t = 0; t < terms; ++t) l += Rational(num(rng), den(rng)) * gens[pick(rng)];
    }
    l *= Rational(scale(rng), scale(rng));
    if (is_ample(l, s)) return l;
  }
}

inline bool is_minus_one(const DivClass& c, const SurfaceModel& s) {
  return c.is_integral() && square(c, s) == Rational(-1) &&
         anticanonical_degree(c, s) == Rational(1);
}

// Every integral class h*H - sum m_i E_i with 0 <= h <= max_h and
// -1 <= m_i <= h satisfying `keep`, by plain nested enumeration.
inline std::vector<DivClass> brute_force_classes(const SurfaceModel& s, int max_h,
                                                 const std::function<bool(const DivClass&)>& keep) {
  std::vector<DivClass> out;
  const std::size_t r = s.rank();
  for (int h = 0; h <= max_h; ++h) {
    std::vector<int> m(r, -1);
    for (;;) {
      std::vector<Rational> e;
      for (int x : m) e.emplace_back(-x);
      DivClass c(Rational(h), std::move(e));
      if (keep(c)) out.push_back(std::move(c));
      std::size_t i = 0;
      while (i < r && m[i] == h) m[i++] = -1;
      if (i == r) break;
      ++m[i];
    }
  }
  return out;
}

// Gaussian elimination over the rationals; nullopt unless uniquely solvable.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

struct VertexResult {
  bool feasible = false;
  Rational value;
};

// Minimum over the vertices of a bounded program whose variables are all
// nonnegative. Every n-subset of the constraints (x_i >= 0 included) is
// solved as equalities and kept when feasible.
inline VertexResult vertex_enumeration(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars();
  std::vector<std::vector<Rational>> rows = lp.rows;
  std::vector<Rational> rhs = lp.rhs;
  std::vector<Sense> senses = lp.senses;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(n);
    row[i] = Rational(1);
    rows.push_back(row);
    rhs.emplace_back(0);
    senses.push_back(Sense::GreaterEqual);
  }
  auto feasible = [&](const std::vector<Rational>& x) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Rational v;
      for (std::size_t k = 0; k < n; ++k) v += rows[r][k] * x[k];
      if (senses[r] == Sense::LessEqual && v > rhs[r]) return false;
      if (senses[r] == Sense::GreaterEqual && v < rhs[r]) return false;
      if (senses[r] == Sense::Equal && v != rhs[r]) return false;
    }
    return true;
  };
  VertexResult best;
  std::vector<std::size_t> pick(n);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
    if (pos == n) {
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> b;
      for (auto i : pick) {
        a.push_back(rows[i]);
        b.push_back(rhs[i]);
      }
      const auto x = solve_square(a, b);
      if (!x || !feasible(*x)) return;
      Rational v;
      for (std::size_t k = 0; k < n; ++k) v += lp.objective[k] * (*x)[k];
      if (!best.feasible || v < best.value) best = {true, v};
      return;
    }
    for (std::size_t i = from; i < rows.size(); ++i) {
      pick[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  return best;
}

// mu by bisection on lambda with cone membership of K + lambda*l. Returns
// [lo, hi] with K + hi*l in the cone, K + lo*l outside, hi - lo <= width.
struct Bracket {
  Rational lo, hi;
};

inline bool in_mori_cone(const DivClass& x, const SurfaceModel& s) {
  const auto& g = mori_generators(s);
  const auto t = cone_member(x, g);
  if (!t) return false;
  DivClass sum = s.zero();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if ((*t)[i].sign() < 0) return false;
    sum += (*t)[i] * g[i];
  }
  return sum == x;
}

inline Bracket bisect_mu(const DivClass& l, const SurfaceModel& s, const Rational& width) {
  const DivClass k = canonical(s);
  Rational lo(0), hi(1);
  while (!in_mori_cone(k + hi * l, s)) {
    lo = hi;
    hi *= Rational(2);
  }
  while (hi - lo > width) {
    const Rational mid = (lo + hi) / Rational(2);
    if (in_mori_cone(k + mid * l, s)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {lo, hi};
}

}  // namespace kstab::oracle

#endif  // KSTAB_TESTS_ORACLES_HPP_
