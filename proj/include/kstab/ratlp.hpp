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

#ifndef KSTAB_RATLP_HPP_
#define KSTAB_RATLP_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "kstab/lattice.hpp"
#include "kstab/rational.hpp"

namespace kstab {

enum class Sense { LessEqual, Equal, GreaterEqual };
enum class VarBound { NonNegative, Free };

/// minimize objective.x subject to rows[i].x (senses[i]) rhs[i].
struct LinearProgram {
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> rows;
  std::vector<Sense> senses;
  std::vector<Rational> rhs;
  std::vector<VarBound> bounds;

  std::size_t num_vars() const { return objective.size(); }

  /// Appends a constraint row.
  void add_row(std::vector<Rational> row, Sense sense, Rational value);

  /// Throws DomainError on inconsistent dimensions.
  void validate() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;              // meaningful when Optimal
  std::vector<Rational> point; // meaningful when Optimal
};

/// Two-phase dense simplex over the rationals with Bland's least-index rule.
/// Terminates on every input; an Optimal point satisfies every constraint
/// exactly (checked before returning).
LpResult solve(const LinearProgram& lp);

/// Returns nonnegative t with sum t_i*generators[i] == target, or nullopt if
/// no such combination exists. A returned vector is re-verified by
/// substitution.
std::optional<std::vector<Rational>> cone_member(
    const DivClass& target, std::span<const DivClass> generators);

}  // namespace kstab

#endif  // KSTAB_RATLP_HPP_
