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

#include "kstab/curves.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <sstream>

#include "kstab/error.hpp"

namespace kstab {
namespace {

// Integral classes aH - sum b_i E_i with -K.C = anti_degree and
// C^2 = self_intersection, b_i in [-1, a]. The constraints read
// sum b_i = 3a - anti_degree and sum b_i^2 = a^2 - self_intersection.
class BoundedSearch {
 public:
  BoundedSearch(std::size_t rank, long anti_degree, long self_intersection)
      : rank_(rank), anti_degree_(anti_degree), self_(self_intersection),
        b_(rank) {}

  std::vector<DivClass> run() {
    // (sum b)^2 <= r * sum b^2 bounds a because 9 - r > 0.
    for (a_ = 0; a_ <= 64; ++a_) {
      const long sum = 3 * a_ - anti_degree_;
      const long squares = a_ * a_ - self_;
      if (squares < 0) continue;
      if (sum * sum > static_cast<long>(rank_) * squares) {
        if (a_ > 3 * anti_degree_) break;
        continue;
      }
      descend(0, sum, squares);
    }
    return std::move(found_);
  }

 private:
  void descend(std::size_t slot, long sum, long squares) {
    const long left = static_cast<long>(rank_ - slot);
    if (left == 0) {
      if (sum == 0 && squares == 0) emit();
      return;
    }
    if (squares < 0 || sum * sum > left * squares) return;
    const long cap = std::max<long>(a_, 1);
    if (squares > left * cap * cap) return;
    for (long b = -1; b <= a_; ++b) {
      if (b * b > squares) continue;
      b_[slot] = b;
      descend(slot + 1, sum - b, squares - b * b);
    }
  }

  void emit() {
    std::vector<Rational> e;
    e.reserve(rank_);
    for (long b : b_) e.emplace_back(-b);
    found_.emplace_back(Rational(a_), std::move(e));
  }

  std::size_t rank_;
  long anti_degree_;
  long self_;
  long a_ = 0;
  std::vector<long> b_;
  std::vector<DivClass> found_;
};

std::vector<DivClass> compute_minus_one(const SurfaceModel& s) {
  auto out = BoundedSearch(s.rank(), 1, -1).run();
  const DivClass anti = s.anticanonical();
  for (const auto& c : out) {
    if (square(c, s) != Rational(-1) || intersect(anti, c, s) != Rational(1) ||
        !c.is_integral()) {
      throw InvariantViolation("(-1)-curve search produced " + c.to_string());
    }
  }
  std::sort(out.begin(), out.end(), standard_less);
  return out;
}

std::vector<DivClass> compute_fibers(const SurfaceModel& s) {
  auto candidates = BoundedSearch(s.rank(), 2, 0).run();
  const auto& curves = minus_one_curves(s);
  const DivClass anti = s.anticanonical();
  std::vector<DivClass> out;
  for (auto& c : candidates) {
    if (square(c, s) != Rational(0) || intersect(anti, c, s) != Rational(2)) {
      throw InvariantViolation("fiber search produced " + c.to_string());
    }
    const bool nef = std::all_of(curves.begin(), curves.end(), [&](const DivClass& g) {
      return intersect(c, g, s).sign() >= 0;
    });
    if (nef) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), standard_less);
  return out;
}

template <typename Compute>
const std::vector<DivClass>& cached(const SurfaceModel& s, Compute compute,
                                    std::array<std::once_flag, 9>& flags,
                                    std::array<std::vector<DivClass>, 9>& store) {
  const auto d = static_cast<std::size_t>(s.degree());
  std::call_once(flags[d], [&] { store[d] = compute(s); });
  return store[d];
}

}  // namespace

bool standard_less(const DivClass& a, const DivClass& b) {
  if (a.h() != b.h()) return a.h() < b.h();
  const std::size_t n = std::min(a.rank(), b.rank());
  for (std::size_t i = 0; i < n; ++i) {
    const Rational x = a.e(i).abs();
    const Rational y = b.e(i).abs();
    if (x != y) return x > y;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a.e(i) != b.e(i)) return a.e(i) < b.e(i);
  }
  return a.rank() < b.rank();
}

const std::vector<DivClass>& minus_one_curves(const SurfaceModel& s) {
  static std::array<std::once_flag, 9> flags;
  static std::array<std::vector<DivClass>, 9> store;
  return cached(s, compute_minus_one, flags, store);
}

const std::vector<DivClass>& fiber_classes(const SurfaceModel& s) {
  static std::array<std::once_flag, 9> flags;
  static std::array<std::vector<DivClass>, 9> store;
  return cached(s, compute_fibers, flags, store);
}

void for_each_disjoint_set(
    std::span<const DivClass> curves, std::size_t k, const SurfaceModel& s,
    const std::function<bool(std::span<const std::size_t>)>& visit) {
  const std::size_t n = curves.size();
  // Pairwise orthogonality table, computed once per call.
  std::vector<char> disjoint(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool z = intersect(curves[i], curves[j], s).is_zero();
      disjoint[i * n + j] = disjoint[j * n + i] = z ? 1 : 0;
    }
  }
  std::vector<std::size_t> chosen;
  chosen.reserve(k);
  bool keep_going = true;
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    if (!keep_going) return;
    if (chosen.size() == k) {
      keep_going = visit(chosen);
      return;
    }
    for (std::size_t i = start; i < n && keep_going; ++i) {
      if (n - i < k - chosen.size()) break;
      const bool ok = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t j) {
        return disjoint[i * n + j] != 0;
      });
      if (!ok) continue;
      chosen.push_back(i);
      extend(i + 1);
      chosen.pop_back();
    }
  };
  extend(0);
}

std::vector<std::vector<std::size_t>> disjoint_sets(
    std::span<const DivClass> curves, std::size_t k, const SurfaceModel& s) {
  std::vector<std::vector<std::size_t>> out;
  for_each_disjoint_set(curves, k, s, [&](std::span<const std::size_t> set) {
    out.emplace_back(set.begin(), set.end());
    return true;
  });
  return out;
}

std::string curve_name(const DivClass& c) {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Rational& coeff, const std::string& symbol) {
    if (coeff.is_zero()) return;
    const bool negative = coeff.sign() < 0;
    if (negative) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    const Rational mag = coeff.abs();
    if (mag != Rational(1)) {
      if (mag.is_integer()) {
        os << mag;
      } else {
        os << '(' << mag << ')';
      }
    }
    os << symbol;
    first = false;
  };
  term(c.h(), "H");
  for (std::size_t i = 0; i < c.rank(); ++i) term(c.e(i), "E" + std::to_string(i + 1));
  if (first) os << '0';
  return os.str();
}

}  // namespace kstab
