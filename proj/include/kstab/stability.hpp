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

#ifndef KSTAB_STABILITY_HPP_
#define KSTAB_STABILITY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "kstab/alphabound.hpp"
#include "kstab/cones.hpp"
#include "kstab/lattice.hpp"
#include "kstab/rational.hpp"

namespace kstab {

/// (-K.l)/l^2. Throws DomainError when l^2 = 0.
Rational nu(const DivClass& l, const SurfaceModel& s);

/// Dervan's condition (A): -K - (2/3)nu(l)*l is nef. Requires l ample.
bool condition_a(const DivClass& l, const SurfaceModel& s);

/// (2/3)nu(l)*l, the representative with nu = 3/2.
DivClass normalize(const DivClass& l, const SurfaceModel& s);

struct EpsilonData {
  DivClass residual;  // R = -K - normalize(l)
  Rational epsilon;   // -K.R
};

EpsilonData epsilon_data(const DivClass& l, const SurfaceModel& s);

struct GammaBound {
  Rational gamma;        // lower bound for alpha of the normalized class
  Rational epsilon;
  DivClass normalized;
  Rational alpha_lower;  // gamma * (2/3)nu(l), the bound for l itself
};

/// Degree 1: 6/5 if eps >= 1/2, else 3/(3-eps). Degree 2: 12/11 if eps >= 1,
/// else 12/(12-eps). Throws DomainError outside degrees 1, 2 or when
/// condition (A) fails.
GammaBound gamma_lower_bound(const SurfaceModel& s, const DivClass& l);

/// l = c*(-K + x*(G1+...+G6)) for six disjoint (-1)-curves, c > 0, on a cubic
/// surface. The first six-set in enumeration order giving x > 0 is used, and
/// the first match of any sign otherwise.
struct SixLineMatch {
  Rational x;
  Rational scale;
  std::vector<DivClass> lines;
};
std::optional<SixLineMatch> match_six_line(const DivClass& l, const SurfaceModel& s);

/// l = c*(-K + x*G) for a single (-1)-curve G on a cubic surface, x != 0.
struct OneLineMatch {
  Rational x;
  Rational scale;
  DivClass line;
};
std::optional<OneLineMatch> match_one_line(const DivClass& l, const SurfaceModel& s);

struct CubicLineReport {
  Rational x;
  Rational nu;            // (3+x)/(3+2x-x^2)
  bool condition_a = false;  // x <= 3/5
  Rational alpha_upper;   // 3/(4+2x)
  Rational two_thirds_nu;
  bool dervan_fails = false;  // alpha_upper <= (2/3)nu
  bool in_window = false;     // 13x^2+2x-3 >= 0 and x <= 3/5
};

/// -K + x*E1 on the cubic surface, 0 <= x < 1. The closed forms are checked
/// against the lattice computation before returning.
CubicLineReport cubic_line_family_report(const Rational& x);

enum class VerdictStatus {
  KStableByMainTheorem,
  KStableBySixLineTheorem,
  DervanInapplicable,
  Unsupported,
  Unknown
};
std::string to_string(VerdictStatus status);

struct Verdict {
  VerdictStatus status = VerdictStatus::Unknown;
  int degree = 0;
  DivClass input = DivClass::zero(0);
  bool condition_a = false;
  Rational nu;
  std::optional<Rational> gamma;
  std::optional<Rational> epsilon;
  std::optional<Rational> alpha_lower;
  std::optional<Rational> mu;
  std::optional<ContractionData> contraction;
  std::optional<Certificate> certificate;  // for the input class
  std::optional<SlopeComparison> comparison;
  std::optional<Rational> six_line_x;
  std::vector<std::string> notes;
};

/// Throws DomainError when l is not ample.
Verdict verdict(const SurfaceModel& s, const DivClass& l);

}  // namespace kstab

#endif  // KSTAB_STABILITY_HPP_
