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

#ifndef KSTAB_APPENDIX_HPP_
#define KSTAB_APPENDIX_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "kstab/rational.hpp"

namespace kstab {

/// Five coefficients 1 >= a1 >= ... >= a5 >= 0 and delta >= 0.
struct AppendixInput {
  std::array<Rational, 5> a;
  Rational delta;
};

/// Throws DomainError if the ordering or sign hypotheses fail. Inputs are
/// never re-sorted.
void validate(const AppendixInput& in);

/// Largest of the twelve sums a2, a2+a3, a2+a4, a2+a5, a3+a4, a3+a5, a4+a5,
/// a2+a3+a4, a2+a3+a5, a2+a4+a5, a3+a4+a5, a2+a3+a4+a5 not exceeding 1
/// (0 if none does).
Rational twelve_sum_n(const AppendixInput& in);

/// Which branch of the piecewise alpha applies (1..4), tested in order:
///   1: a2+a3 <= 1+a4;  2: a2+a4 <= 1;  3: a3+a4 <= 1;  4: otherwise.
int alpha_case(const AppendixInput& in);

/// 2 / (3 + 2a1 + 2delta + S) with S = a2+a3+a4, a2+a4, a3+a4 or a2 by case.
Rational alpha_piecewise(const AppendixInput& in);

struct InequalityCheck {
  Rational lhs1, rhs1;  // 2/(3+2a1+2delta+N) vs (2/3)nu with five a's
  Rational lhs2, rhs2;  // piecewise alpha vs the four-a slope
  bool ineq1 = false, ineq2 = false;
  bool strict1 = false, strict2 = false;
};

/// Evaluates both inequalities exactly.
InequalityCheck prop_a1(const AppendixInput& in);

struct AppendixGridReport {
  int max_denominator = 1;
  Rational delta_max;
  std::uint64_t inputs = 0;
  std::uint64_t passed = 0;
  std::uint64_t equality_cases = 0;
  std::uint64_t equality_off_slice = 0;  // equality with a1 > 0 or delta > 0
  std::vector<std::string> counterexamples;  // sorted

  bool ok() const { return counterexamples.empty() && inputs == passed; }
};

/// Every input with coordinates in {0, 1/q, ..., 1} (delta in
/// {0, 1/q, ...} up to delta_max), checked with prop_a1. An input fails when an
/// inequality is violated, when it is an equality off the a1 = delta = 0
/// slice, or when it is strict on that slice.
AppendixGridReport grid_oracle(int max_denominator, const Rational& delta_max = Rational(1));

}  // namespace kstab

#endif  // KSTAB_APPENDIX_HPP_
