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

#ifndef KSTAB_CURVES_HPP_
#define KSTAB_CURVES_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "kstab/lattice.hpp"

namespace kstab {

/// Total order used for every enumeration: ascending h, then the multiplicity
/// pattern |e_1|..|e_r| in descending lexicographic order, then e ascending.
/// Under it E1 < E2 < ... < H-E1-E2 < H-E1-E3 < ...
bool standard_less(const DivClass& a, const DivClass& b);

/// All integral classes C with C^2 = -1 and -K.C = 1, sorted by
/// standard_less. Computed once per degree and cached.
const std::vector<DivClass>& minus_one_curves(const SurfaceModel& s);

/// All integral classes C with C^2 = 0, -K.C = 2 and C.G >= 0 for every
/// (-1)-curve G, sorted by standard_less. Cached like minus_one_curves.
const std::vector<DivClass>& fiber_classes(const SurfaceModel& s);

/// Calls `visit` with every k-subset (as ascending indices into `curves`)
/// whose members are pairwise orthogonal, in lexicographic index order.
/// Enumeration stops early when `visit` returns false.
void for_each_disjoint_set(
    std::span<const DivClass> curves, std::size_t k, const SurfaceModel& s,
    const std::function<bool(std::span<const std::size_t>)>& visit);

/// Every k-subset of pairwise disjoint curves, lexicographic index order.
std::vector<std::vector<std::size_t>> disjoint_sets(
    std::span<const DivClass> curves, std::size_t k, const SurfaceModel& s);

/// Human-readable form such as "E3", "H-E1-E2" or "2H-E1-E2-E3-E4-E5".
std::string curve_name(const DivClass& c);

}  // namespace kstab

#endif  // KSTAB_CURVES_HPP_
