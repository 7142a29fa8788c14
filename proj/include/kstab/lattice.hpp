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

#ifndef KSTAB_LATTICE_HPP_
#define KSTAB_LATTICE_HPP_

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "kstab/rational.hpp"

namespace kstab {

/// Numerical class h*H + sum e_i*E_i on the blow-up of the plane in r points.
class DivClass {
 public:
  DivClass(Rational h, std::vector<Rational> e);

  static DivClass zero(std::size_t rank);

  const Rational& h() const { return h_; }
  std::span<const Rational> e() const { return e_; }
  const Rational& e(std::size_t i) const { return e_.at(i); }
  std::size_t rank() const { return e_.size(); }

  bool is_zero() const;
  bool is_integral() const;

  DivClass& operator+=(const DivClass& rhs);
  DivClass& operator-=(const DivClass& rhs);
  DivClass& operator*=(const Rational& c);

  friend DivClass operator+(DivClass a, const DivClass& b) { return a += b; }
  friend DivClass operator-(DivClass a, const DivClass& b) { return a -= b; }
  friend DivClass operator*(const Rational& c, DivClass a) { return a *= c; }
  friend DivClass operator*(DivClass a, const Rational& c) { return a *= c; }
  DivClass operator-() const;

  friend bool operator==(const DivClass&, const DivClass&) = default;

  /// "(h; e1, ..., er)".
  std::string to_string() const;

 private:
  Rational h_;
  std::vector<Rational> e_;
};

std::ostream& operator<<(std::ostream& os, const DivClass& c);

/// Blow-up of P^2 in r = 9 - degree general points, 1 <= degree <= 8.
class SurfaceModel {
 public:
  /// Throws DomainError unless 1 <= degree <= 8.
  explicit SurfaceModel(int degree);

  int degree() const { return degree_; }
  std::size_t rank() const { return static_cast<std::size_t>(9 - degree_); }

  DivClass line() const;                        // H
  DivClass exceptional(std::size_t i) const;    // E_{i+1}, 0-based index
  DivClass zero() const { return DivClass::zero(rank()); }
  DivClass anticanonical() const;               // 3H - sum E_i

  /// Throws DomainError if `c` has the wrong number of coordinates.
  void check(const DivClass& c) const;

  friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;

 private:
  int degree_;
};

/// a.h*b.h - sum a.e_i*b.e_i. Throws DomainError on dimension mismatch.
Rational intersect(const DivClass& a, const DivClass& b, const SurfaceModel& s);

/// Self-intersection a.a.
Rational square(const DivClass& a, const SurfaceModel& s);

/// K_S = -3H + sum E_i.
DivClass canonical(const SurfaceModel& s);

/// -K.a.
Rational anticanonical_degree(const DivClass& a, const SurfaceModel& s);

}  // namespace kstab

#endif  // KSTAB_LATTICE_HPP_
