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

#ifndef KSTAB_ALPHABOUND_HPP_
#define KSTAB_ALPHABOUND_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kstab/cones.hpp"
#include "kstab/lattice.hpp"
#include "kstab/rational.hpp"

namespace kstab {

struct CertificateComponent {
  std::string label;  // e.g. "E1", "L12", "Z", "F1'", "Z23"
  DivClass curve;
  Rational coefficient;
};

/// Effective Q-divisor D = sum c_i * G_i numerically equal to L. A component
/// with coefficient c forces alpha(S, L) <= 1/c, so bound = 1 / max c_i.
struct Certificate {
  std::vector<CertificateComponent> divisor;
  std::size_t witness_index = 0;
  Rational bound;
};

using IndexFamily = std::vector<std::vector<std::size_t>>;

/// The twelve index sets {2}, {2,3}, {2,4}, {2,5}, {3,4}, {3,5}, {4,5},
/// {2,3,4}, {2,3,5}, {2,4,5}, {3,4,5}, {2,3,4,5}, as 0-based positions into
/// (a2, a3, a4, a5). Used for the degree 4 blow-down to P^2.
const IndexFamily& blowdown_family();

/// The five index sets {2}, {2,3}, {2,4}, {3,4}, {2,3,4} over (a2, a3, a4).
/// Used for the degree 4 conic bundle over F1.
const IndexFamily& conic_family();

/// Position in `family` of the first set whose sum is the largest one not
/// exceeding 1; nullopt if every sum exceeds 1 (or the family is empty).
std::optional<std::size_t> admissible_argmax(std::span<const Rational> values,
                                             const IndexFamily& family);

/// Largest listed subset sum that is <= 1, or 0 when there is none.
/// Throws DomainError on a negative value.
Rational largest_admissible_sum(std::span<const Rational> values, const IndexFamily& family);

/// Effective divisor bounding alpha(S, L) for L = reconstruct(cd), degree 4..7.
/// Every component is checked to be a (-1)-curve with nonnegative
/// coefficient and the class identity is verified before returning.
Certificate certificate(const SurfaceModel& s, const ContractionData& cd);

/// sum c_i * G_i.
DivClass divisor_class(const Certificate& cert, const SurfaceModel& s);

/// Throws InvariantViolation unless the certificate is effective, equals
/// `target` and its bound/witness are consistent.
void verify_certificate(const Certificate& cert, const DivClass& target, const SurfaceModel& s);

/// Certificate for factor * L from one for L (coefficients scale, bound
/// divides). factor > 0.
Certificate rescale(const Certificate& cert, const Rational& factor);

struct SlopeComparison {
  Rational bound;
  Rational two_thirds_nu;
  bool strict = false;
  bool equality = false;
};

/// Compares the bound with (2/3)nu(L). Throws InvariantViolation unless the
/// bound is strictly smaller, or equal exactly when degree = 4 and
/// a = delta = 0. In degree 4 the result is also re-derived through the
/// standalone inequality evaluator and must agree with it.
SlopeComparison compare_with_slope(const SurfaceModel& s, const ContractionData& cd,
                                   const Certificate& cert);

struct CertificateGridReport {
  int degree = 0;
  std::uint64_t checked = 0;
  std::uint64_t per_kind[3] = {0, 0, 0};
  std::uint64_t equality_points = 0;
  std::uint64_t decompositions_checked = 0;
  std::vector<std::string> counterexamples;  // sorted

  bool ok() const { return counterexamples.empty(); }
};

/// Builds every standard normal form of the given degree with a_i in
/// {p/q : 0 <= p < q <= max_denominator} (nonincreasing) and, for the conic
/// bundle kinds, delta in {p/q <= delta_max, q <= max_denominator}; checks
/// certificate effectivity, class identity and the slope comparison. Every
/// `decompose_stride`-th class (0 = never) is also pushed through
/// face_decompose and certified again from the recovered normal form.
CertificateGridReport certificate_grid(int degree, int max_denominator, const Rational& delta_max,
                                       std::size_t decompose_stride = 1);

}  // namespace kstab

#endif  // KSTAB_ALPHABOUND_HPP_
