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

#ifndef KSTAB_CONES_HPP_
#define KSTAB_CONES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "kstab/lattice.hpp"
#include "kstab/rational.hpp"

namespace kstab {

/// Generators of the Mori cone: the (-1)-curves for degree <= 7; E1 and the
/// fiber class H-E1 for degree 8.
const std::vector<DivClass>& mori_generators(const SurfaceModel& s);

/// dv.G >= 0 for every Mori cone generator G.
bool is_nef(const DivClass& dv, const SurfaceModel& s);

/// Nefness decided by the simplex instead of generator products: minimizes
/// dv.y over the slice {y in the Mori cone, -K.y = 1} and tests the sign.
bool is_nef_dual(const DivClass& dv, const SurfaceModel& s);

/// dv.G > 0 for every generator and dv^2 > 0.
bool is_ample(const DivClass& dv, const SurfaceModel& s);

/// First generator G (in enumeration order) with dv.G <= 0, if any.
std::optional<DivClass> ampleness_witness(const DivClass& dv, const SurfaceModel& s);

/// Smallest lambda >= 0 with K + lambda*l in the Mori cone, from an exact
/// parametric LP. Throws DomainError if l is not ample.
Rational mu(const DivClass& l, const SurfaceModel& s);

enum class ContractionKind { ToP2, ConicBundleF1, ConicBundleP1P1 };

std::string to_string(ContractionKind kind);

/// Normal form l = -K + delta*C + sum a_i*E_i of a class with mu = 1.
///
/// ToP2 carries r = 9 - d disjoint (-1)-curves and no fiber; the conic bundle
/// kinds carry r - 1 disjoint curves and a fiber class C orthogonal to all of
/// them. The a_i are nonincreasing, curve_e[i] goes with a[i].
struct ContractionData {
  ContractionKind kind = ContractionKind::ToP2;
  Rational delta;
  std::vector<Rational> a;
  std::vector<DivClass> curve_e;
  std::optional<DivClass> curve_c;

  friend bool operator==(const ContractionData&, const ContractionData&) = default;
};

/// -K + delta*C + sum a_i*E_i.
DivClass reconstruct(const ContractionData& cd, const SurfaceModel& s);

/// Throws DomainError unless `cd` satisfies every structural invariant of the
/// normal form (sorting, 0 <= a_i < 1, disjointness, fiber and kind checks).
void validate(const ContractionData& cd, const SurfaceModel& s);

/// Normal form on the standard curve configuration of `kind`:
///   ToP2:  E1..Er;  F1: E1..E(r-1), C = H-Er;
///   P1xP1: H-E1-E2, E3..Er, C = H-E1.
/// `a` must be nonincreasing (length r for ToP2, r-1 otherwise).
ContractionData standard_contraction(const SurfaceModel& s, ContractionKind kind,
                                     std::vector<Rational> a, Rational delta);

/// Decomposes an ample class with mu(l) = 1 into its normal form. Picks the
/// lexicographically least curve set, trying ToP2 before the conic bundles.
/// Requires degree <= 7.
ContractionData face_decompose(const DivClass& l, const SurfaceModel& s);

}  // namespace kstab

#endif  // KSTAB_CONES_HPP_
