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

#include "kstab/lattice.hpp"

#include <sstream>
#include <utility>

#include "kstab/error.hpp"

namespace kstab {

DivClass::DivClass(Rational h, std::vector<Rational> e)
    : h_(std::move(h)), e_(std::move(e)) {}

DivClass DivClass::zero(std::size_t rank) {
  return DivClass(Rational(0), std::vector<Rational>(rank));
}

bool DivClass::is_zero() const {
  if (!h_.is_zero()) return false;
  for (const auto& x : e_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool DivClass::is_integral() const {
  if (!h_.is_integer()) return false;
  for (const auto& x : e_) {
    if (!x.is_integer()) return false;
  }
  return true;
}

DivClass& DivClass::operator+=(const DivClass& rhs) {
  if (rhs.rank() != rank()) throw DomainError("class rank mismatch in sum");
  h_ += rhs.h_;
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += rhs.e_[i];
  return *this;
}

DivClass& DivClass::operator-=(const DivClass& rhs) {
  if (rhs.rank() != rank()) throw DomainError("class rank mismatch in difference");
  h_ -= rhs.h_;
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= rhs.e_[i];
  return *this;
}

DivClass& DivClass::operator*=(const Rational& c) {
  h_ *= c;
  for (auto& x : e_) x *= c;
  return *this;
}

DivClass DivClass::operator-() const {
  DivClass out = *this;
  out *= Rational(-1);
  return out;
}

std::string DivClass::to_string() const {
  std::ostringstream os;
  os << '(' << h_ << ';';
  for (std::size_t i = 0; i < e_.size(); ++i) {
    os << (i == 0 ? " " : ", ") << e_[i];
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DivClass& c) {
  return os << c.to_string();
}

SurfaceModel::SurfaceModel(int degree) : degree_(degree) {
  if (degree < 1 || degree > 8) {
    throw DomainError("degree " + std::to_string(degree) +
                      " outside the supported range 1..8");
  }
}

DivClass SurfaceModel::line() const {
  return DivClass(Rational(1), std::vector<Rational>(rank()));
}

DivClass SurfaceModel::exceptional(std::size_t i) const {
  if (i >= rank()) throw DomainError("exceptional index out of range");
  std::vector<Rational> e(rank());
  e[i] = Rational(1);
  return DivClass(Rational(0), std::move(e));
}

DivClass SurfaceModel::anticanonical() const { return -canonical(*this); }

void SurfaceModel::check(const DivClass& c) const {
  if (c.rank() != rank()) {
    throw DomainError("class has " + std::to_string(c.rank()) +
                      " exceptional coordinates, degree " +
                      std::to_string(degree_) + " needs " +
                      std::to_string(rank()));
  }
}

Rational intersect(const DivClass& a, const DivClass& b, const SurfaceModel& s) {
  s.check(a);
  s.check(b);
  // Hot path of every cone search: one accumulator, one scratch value.
  mpq_class acc;
  mpq_class term;
  mpq_mul(acc.get_mpq_t(), a.h().raw().get_mpq_t(), b.h().raw().get_mpq_t());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    mpq_mul(term.get_mpq_t(), a.e(i).raw().get_mpq_t(), b.e(i).raw().get_mpq_t());
    acc -= term;
  }
  return Rational(std::move(acc));
}

Rational square(const DivClass& a, const SurfaceModel& s) {
  return intersect(a, a, s);
}

DivClass canonical(const SurfaceModel& s) {
  return DivClass(Rational(-3), std::vector<Rational>(s.rank(), Rational(1)));
}

Rational anticanonical_degree(const DivClass& a, const SurfaceModel& s) {
  return intersect(s.anticanonical(), a, s);
}

}  // namespace kstab
