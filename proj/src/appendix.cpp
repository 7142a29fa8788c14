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

#include "kstab/appendix.hpp"

#include <algorithm>
#include <sstream>

#include "kstab/error.hpp"
#include "kstab/parallel.hpp"

namespace kstab {
namespace {

const Rational kZero(0);
const Rational kOne(1);
const Rational kTwo(2);
const Rational kThree(3);

// (2/3) * (4 + 2delta + sum a) / (4 + 4delta + 2 sum a - sum a^2), over the
// first `count` coefficients.
Rational slope_bound(const AppendixInput& in, std::size_t count) {
  Rational sum, squares;
  for (std::size_t i = 0; i < count; ++i) {
    sum += in.a[i];
    squares += in.a[i] * in.a[i];
  }
  const Rational num = Rational(4) + kTwo * in.delta + sum;
  const Rational den = Rational(4) + Rational(4) * in.delta + kTwo * sum - squares;
  return kTwo * num / (kThree * den);
}

std::string describe(const AppendixInput& in, const char* why) {
  std::ostringstream os;
  os << "a=(";
  for (std::size_t i = 0; i < 5; ++i) os << (i ? "," : "") << in.a[i];
  os << ") delta=" << in.delta << ": " << why;
  return os.str();
}

}  // namespace

void validate(const AppendixInput& in) {
  if (in.a[0] > kOne) throw DomainError("appendix input: a1 > 1");
  for (std::size_t i = 1; i < 5; ++i) {
    if (in.a[i] > in.a[i - 1]) throw DomainError("appendix input: coefficients not nonincreasing");
  }
  if (in.a[4].sign() < 0) throw DomainError("appendix input: negative coefficient");
  if (in.delta.sign() < 0) throw DomainError("appendix input: delta < 0");
}

Rational twelve_sum_n(const AppendixInput& in) {
  const auto& a = in.a;
  const Rational sums[] = {
      a[1],
      a[1] + a[2], a[1] + a[3], a[1] + a[4],
      a[2] + a[3], a[2] + a[4], a[3] + a[4],
      a[1] + a[2] + a[3], a[1] + a[2] + a[4], a[1] + a[3] + a[4], a[2] + a[3] + a[4],
      a[1] + a[2] + a[3] + a[4],
  };
  Rational best = kZero;
  for (const auto& x : sums) {
    if (x <= kOne && x > best) best = x;
  }
  return best;
}

int alpha_case(const AppendixInput& in) {
  validate(in);
  const auto& a = in.a;
  if (a[1] + a[2] <= kOne + a[3]) return 1;
  if (a[1] + a[3] <= kOne) return 2;
  if (a[2] + a[3] <= kOne) return 3;
  return 4;
}

Rational alpha_piecewise(const AppendixInput& in) {
  const auto& a = in.a;
  Rational extra;
  switch (alpha_case(in)) {
    case 1: extra = a[1] + a[2] + a[3]; break;
    case 2: extra = a[1] + a[3]; break;
    case 3: extra = a[2] + a[3]; break;
    default: extra = a[1]; break;
  }
  return kTwo / (kThree + kTwo * a[0] + kTwo * in.delta + extra);
}

InequalityCheck prop_a1(const AppendixInput& in) {
  validate(in);
  InequalityCheck out;
  out.lhs1 = kTwo / (kThree + kTwo * in.a[0] + kTwo * in.delta + twelve_sum_n(in));
  out.rhs1 = slope_bound(in, 5);
  out.lhs2 = alpha_piecewise(in);
  out.rhs2 = slope_bound(in, 4);
  out.ineq1 = out.lhs1 <= out.rhs1;
  out.ineq2 = out.lhs2 <= out.rhs2;
  out.strict1 = out.lhs1 < out.rhs1;
  out.strict2 = out.lhs2 < out.rhs2;
  return out;
}

AppendixGridReport grid_oracle(int max_denominator, const Rational& delta_max) {
  if (max_denominator < 1) throw DomainError("grid_oracle: max_denominator must be >= 1");
  if (delta_max.sign() < 0) throw DomainError("grid_oracle: delta_max must be >= 0");
  const long q = max_denominator;
  std::vector<Rational> deltas;
  for (long k = 0; Rational(k, q) <= delta_max; ++k) deltas.emplace_back(k, q);

  // One task per (delta, a1) pair; a2..a5 enumerated inside.
  const std::size_t tasks = deltas.size() * static_cast<std::size_t>(q + 1);
  std::vector<AppendixGridReport> parts(tasks);
  parallel_for(tasks, [&](std::size_t t) {
    auto& part = parts[t];
    const Rational& delta = deltas[t / static_cast<std::size_t>(q + 1)];
    const long k1 = static_cast<long>(t % static_cast<std::size_t>(q + 1));
    for (long k2 = 0; k2 <= k1; ++k2)
      for (long k3 = 0; k3 <= k2; ++k3)
        for (long k4 = 0; k4 <= k3; ++k4)
          for (long k5 = 0; k5 <= k4; ++k5) {
            AppendixInput in{{Rational(k1, q), Rational(k2, q), Rational(k3, q),
                              Rational(k4, q), Rational(k5, q)},
                             delta};
            const auto r = prop_a1(in);
            ++part.inputs;
            const bool on_slice = k1 == 0 && delta.is_zero();
            const bool equality = !r.strict1 || !r.strict2;
            if (equality) ++part.equality_cases;
            if (equality && !on_slice) ++part.equality_off_slice;
            if (!r.ineq1 || !r.ineq2) {
              part.counterexamples.push_back(describe(in, "inequality violated"));
            } else if (!on_slice && equality) {
              part.counterexamples.push_back(describe(in, "equality off the a1=delta=0 slice"));
            } else if (on_slice && (r.strict1 || r.strict2)) {
              part.counterexamples.push_back(describe(in, "strict on the a1=delta=0 slice"));
            } else {
              ++part.passed;
            }
          }
  });

  AppendixGridReport out;
  out.max_denominator = max_denominator;
  out.delta_max = delta_max;
  for (auto& p : parts) {
    out.inputs += p.inputs;
    out.passed += p.passed;
    out.equality_cases += p.equality_cases;
    out.equality_off_slice += p.equality_off_slice;
    out.counterexamples.insert(out.counterexamples.end(), p.counterexamples.begin(),
                               p.counterexamples.end());
  }
  std::sort(out.counterexamples.begin(), out.counterexamples.end());
  return out;
}

}  // namespace kstab
