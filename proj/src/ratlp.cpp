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

#include "kstab/ratlp.hpp"

#include <string>
#include <utility>

#include "kstab/error.hpp"

namespace kstab {
namespace {

// Dense tableau in equality form A x = b, x >= 0, b >= 0, with a reduced-cost
// row carried along. The last column of every row holds the right-hand side.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<std::size_t> basis,
          std::size_t num_cols)
      : rows_(std::move(rows)), basis_(std::move(basis)), cols_(num_cols),
        reduced_(num_cols + 1) {}

  void set_costs(const std::vector<Rational>& cost) {
    for (std::size_t j = 0; j <= cols_; ++j) {
      Rational z = j < cols_ ? cost[j] : Rational(0);
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& cb = cost[basis_[i]];
        if (cb.is_zero() || rows_[i][j].is_zero()) continue;
        z -= cb * rows_[i][j];
      }
      reduced_[j] = std::move(z);
    }
  }

  // Returns false when the objective is unbounded below.
  bool optimize(const std::vector<char>& allowed) {
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (allowed[j] && reduced_[j].sign() < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return true;
      std::size_t leave = rows_.size();
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][enter].sign() <= 0) continue;
        Rational ratio = rows_[i][cols_] / rows_[i][enter];
        if (leave == rows_.size() || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == rows_.size()) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = rows_[r][c];
    for (auto& x : rows_[r]) {
      if (!x.is_zero()) x /= p;
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      const Rational f = row[c];
      if (f.is_zero()) return;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (!rows_[r][j].is_zero()) row[j] -= f * rows_[r][j];
      }
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != r) eliminate(rows_[i]);
    }
    eliminate(reduced_);
    basis_[r] = c;
  }

  // Objective value of the current basic solution.
  Rational objective() const { return -reduced_[cols_]; }

  std::vector<std::vector<Rational>>& rows() { return rows_; }
  std::vector<std::size_t>& basis() { return basis_; }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(cols_);
    for (std::size_t i = 0; i < rows_.size(); ++i) x[basis_[i]] = rows_[i][cols_];
    return x;
  }

 private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::size_t cols_;
  std::vector<Rational> reduced_;
};

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) out += a[i] * b[i];
  }
  return out;
}

void check_solution(const LinearProgram& lp, const LpResult& res) {
  for (std::size_t j = 0; j < lp.num_vars(); ++j) {
    if (lp.bounds[j] == VarBound::NonNegative && res.point[j].sign() < 0) {
      throw InvariantViolation("simplex returned a negative nonnegative variable");
    }
  }
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    const Rational lhs = dot(lp.rows[i], res.point);
    const bool ok = lp.senses[i] == Sense::Equal       ? lhs == lp.rhs[i]
                    : lp.senses[i] == Sense::LessEqual ? lhs <= lp.rhs[i]
                                                       : lhs >= lp.rhs[i];
    if (!ok) throw InvariantViolation("simplex point violates row " + std::to_string(i));
  }
  if (dot(lp.objective, res.point) != res.value) {
    throw InvariantViolation("simplex objective value does not match its point");
  }
}

}  // namespace

void LinearProgram::add_row(std::vector<Rational> row, Sense sense, Rational value) {
  rows.push_back(std::move(row));
  senses.push_back(sense);
  rhs.push_back(std::move(value));
}

void LinearProgram::validate() const {
  if (bounds.size() != objective.size()) {
    throw DomainError("linear program: bounds and objective differ in length");
  }
  if (senses.size() != rows.size() || rhs.size() != rows.size()) {
    throw DomainError("linear program: row, sense and rhs counts differ");
  }
  for (const auto& row : rows) {
    if (row.size() != objective.size()) {
      throw DomainError("linear program: row length differs from variable count");
    }
  }
}

LpResult solve(const LinearProgram& lp) {
  lp.validate();
  const std::size_t n = lp.num_vars();
  const std::size_t m = lp.rows.size();

  // Column layout: x+ (one per variable), x- (free variables), slacks, artificials.
  std::vector<std::size_t> neg_col(n, 0);
  std::size_t cols = n;
  for (std::size_t j = 0; j < n; ++j) {
    if (lp.bounds[j] == VarBound::Free) neg_col[j] = cols++;
  }
  std::vector<std::size_t> slack_col(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (lp.senses[i] != Sense::Equal) slack_col[i] = cols++;
  }
  const std::size_t first_artificial = cols;
  cols += m;

  std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(cols + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto& row = rows[i];
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = lp.rows[i][j];
      if (lp.bounds[j] == VarBound::Free) row[neg_col[j]] = -lp.rows[i][j];
    }
    if (lp.senses[i] == Sense::LessEqual) row[slack_col[i]] = Rational(1);
    if (lp.senses[i] == Sense::GreaterEqual) row[slack_col[i]] = Rational(-1);
    row[cols] = lp.rhs[i];
    if (row[cols].sign() < 0) {
      for (auto& x : row) x = -x;
    }
    row[first_artificial + i] = Rational(1);
    basis[i] = first_artificial + i;
  }

  Tableau tab(std::move(rows), std::move(basis), cols);
  std::vector<char> allowed(cols, 1);

  // Phase 1: minimize the sum of artificials.
  std::vector<Rational> phase1(cols);
  for (std::size_t i = 0; i < m; ++i) phase1[first_artificial + i] = Rational(1);
  tab.set_costs(phase1);
  tab.optimize(allowed);
  if (tab.objective().sign() > 0) return LpResult{LpStatus::Infeasible, {}, {}};

  // Drive zero-level artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < tab.rows().size();) {
    if (tab.basis()[i] < first_artificial) {
      ++i;
      continue;
    }
    std::size_t col = first_artificial;
    for (std::size_t j = 0; j < first_artificial; ++j) {
      if (!tab.rows()[i][j].is_zero()) {
        col = j;
        break;
      }
    }
    if (col == first_artificial) {
      tab.rows().erase(tab.rows().begin() + static_cast<std::ptrdiff_t>(i));
      tab.basis().erase(tab.basis().begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }
    tab.pivot(i, col);
    ++i;
  }

  // Phase 2 on the structural columns only.
  for (std::size_t j = first_artificial; j < cols; ++j) allowed[j] = 0;
  std::vector<Rational> cost(cols);
  for (std::size_t j = 0; j < n; ++j) {
    cost[j] = lp.objective[j];
    if (lp.bounds[j] == VarBound::Free) cost[neg_col[j]] = -lp.objective[j];
  }
  tab.set_costs(cost);
  if (!tab.optimize(allowed)) return LpResult{LpStatus::Unbounded, {}, {}};

  const auto x = tab.solution();
  LpResult res;
  res.status = LpStatus::Optimal;
  res.point.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    res.point[j] = x[j];
    if (lp.bounds[j] == VarBound::Free) res.point[j] -= x[neg_col[j]];
  }
  res.value = dot(lp.objective, res.point);
  check_solution(lp, res);
  return res;
}

std::optional<std::vector<Rational>> cone_member(
    const DivClass& target, std::span<const DivClass> generators) {
  for (const auto& g : generators) {
    if (g.rank() != target.rank()) throw DomainError("cone_member: rank mismatch");
  }
  if (target.is_zero()) return std::vector<Rational>(generators.size());

  LinearProgram lp;
  lp.objective.assign(generators.size(), Rational(0));
  lp.bounds.assign(generators.size(), VarBound::NonNegative);
  for (std::size_t k = 0; k <= target.rank(); ++k) {
    std::vector<Rational> row;
    row.reserve(generators.size());
    for (const auto& g : generators) row.push_back(k == 0 ? g.h() : g.e(k - 1));
    lp.add_row(std::move(row), Sense::Equal, k == 0 ? target.h() : target.e(k - 1));
  }
  auto res = solve(lp);
  if (res.status != LpStatus::Optimal) return std::nullopt;

  DivClass sum = DivClass::zero(target.rank());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (!res.point[i].is_zero()) sum += res.point[i] * generators[i];
  }
  if (sum != target) throw InvariantViolation("cone_member coefficients do not reproduce target");
  return std::move(res.point);
}

}  // namespace kstab
