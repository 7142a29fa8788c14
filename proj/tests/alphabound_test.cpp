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

#include "kstab/alphabound.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kstab/error.hpp"
#include "kstab/stability.hpp"

namespace kstab {
namespace {

using Coeffs = std::map<std::string, Rational>;

Coeffs by_label(const Certificate& c) {
  Coeffs out;
  for (const auto& p : c.divisor) out[p.label] = p.coefficient;
  return out;
}

// Drops zero entries so expected maps can be written in full.
Coeffs nonzero(Coeffs m) {
  std::erase_if(m, [](const auto& kv) { return kv.second.is_zero(); });
  return m;
}

std::vector<Rational> grid(int q) {
  std::vector<Rational> v;
  for (long d = 1; d <= q; ++d)
    for (long p = 0; p < d; ++p) v.emplace_back(p, d);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

const Rational half(1, 2);

TEST(AdmissibleSum, Examples) {
  const std::vector<Rational> zeros(4, Rational(0));
  EXPECT_EQ(largest_admissible_sum(zeros, blowdown_family()), Rational(0));
  const std::vector<Rational> a{Rational(3, 5), Rational(1, 2), Rational(3, 10), Rational(1, 5)};
  EXPECT_EQ(largest_admissible_sum(a, blowdown_family()), Rational(1));
  const std::vector<Rational> b(4, Rational(9, 10));
  EXPECT_EQ(largest_admissible_sum(b, blowdown_family()), Rational(9, 10));
  EXPECT_EQ(admissible_argmax(b, blowdown_family()), 0u);
  EXPECT_EQ(largest_admissible_sum(a, IndexFamily{}), Rational(0));
  const std::vector<Rational> big(4, Rational(3, 2));
  EXPECT_EQ(largest_admissible_sum(big, blowdown_family()), Rational(0));
  const std::vector<Rational> neg{Rational(-1), 0, 0, 0};
  EXPECT_THROW(largest_admissible_sum(neg, blowdown_family()), DomainError);
  EXPECT_EQ(blowdown_family().size(), 12u);
  EXPECT_EQ(conic_family().size(), 5u);
}

TEST(Certificate, DegreeSevenPlane) {
  const SurfaceModel s(7);
  const auto cd = standard_contraction(s, ContractionKind::ToP2, {half, Rational(1, 3)}, 0);
  const auto cert = certificate(s, cd);
  EXPECT_EQ(by_label(cert), (Coeffs{{"L12", 3}, {"E1", Rational(5, 2)}, {"E2", Rational(7, 3)}}));
  EXPECT_EQ(cert.bound, Rational(1, 3));
  EXPECT_EQ(cert.divisor[cert.witness_index].label, "L12");
  EXPECT_EQ(divisor_class(cert, s), reconstruct(cd, s));
}

TEST(Certificate, DegreeFourRowTwoThree) {
  const SurfaceModel s(4);
  const auto cd = standard_contraction(s, ContractionKind::ToP2,
                                       {half, Rational(1, 3), Rational(1, 4), 0, 0}, 0);
  const auto cert = certificate(s, cd);
  const auto c = by_label(cert);
  EXPECT_EQ(c.at("E1"), Rational(55, 24));
  EXPECT_EQ(c.at("Z"), Rational(5, 24));
  EXPECT_EQ(c.at("L12"), Rational(11, 24));
  EXPECT_EQ(c.at("L13"), Rational(13, 24));
  EXPECT_EQ(c.at("L14"), Rational(19, 24));
  EXPECT_EQ(c.at("L15"), Rational(19, 24));
  EXPECT_EQ(cert.bound, Rational(24, 55));
}

TEST(Certificate, DegreeFourZeroData) {
  const SurfaceModel s(4);
  const auto cd = face_decompose(s.anticanonical(), s);
  const auto cert = certificate(s, cd);
  EXPECT_EQ(cert.bound, Rational(2, 3));
  const auto cmp = compare_with_slope(s, cd, cert);
  EXPECT_TRUE(cmp.equality);
  EXPECT_FALSE(cmp.strict);
}

TEST(Certificate, PlaneSubstitutionIdentities) {
  // E_j = (E1 - Z + sum_{i != j} L1i - L1j) / 2 on the standard frame.
  const SurfaceModel s(4);
  DivClass z = Rational(2) * s.line();
  for (std::size_t i = 0; i < 5; ++i) z -= s.exceptional(i);
  auto l1 = [&](std::size_t i) { return s.line() - s.exceptional(0) - s.exceptional(i); };
  for (std::size_t j = 1; j < 5; ++j) {
    DivClass rhs = half * s.exceptional(0) - half * z;
    for (std::size_t i = 1; i < 5; ++i) rhs += (i == j ? -half : half) * l1(i);
    EXPECT_EQ(rhs, s.exceptional(j)) << j;
  }
}

// Rows of the degree 4 table, 1-based indices into (a1..a5), in listed order.
const std::vector<std::vector<int>> kTableRows = {
    {2}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5},
    {2, 3, 4}, {2, 3, 5}, {2, 4, 5}, {3, 4, 5}, {2, 3, 4, 5}};

TEST(Certificate, DegreeFourTableRows) {
  const SurfaceModel s(4);
  const auto values = grid(4);
  std::map<std::size_t, int> rows_hit;
  std::vector<Rational> a(5);
  // All nonincreasing 5-tuples over the grid.
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t cap) {
    if (pos < 5) {
      for (std::size_t i = 0; i <= cap; ++i) {
        a[pos] = values[i];
        rec(pos + 1, i);
      }
      return;
    }
    auto A = [&](int i) { return a[i - 1]; };
    std::optional<std::size_t> row;
    Rational n;
    for (std::size_t k = 0; k < kTableRows.size(); ++k) {
      Rational sum;
      for (int i : kTableRows[k]) sum += A(i);
      if (sum <= Rational(1) && (!row || sum > n)) {
        row = k;
        n = sum;
      }
    }
    ASSERT_TRUE(row);
    ++rows_hit[*row];
    const auto& t = kTableRows[*row];
    auto in = [&](int i) { return std::find(t.begin(), t.end(), i) != t.end(); };
    Coeffs expected{{"E1", (Rational(3) + Rational(2) * A(1) + n) / Rational(2)},
                    {"Z", (Rational(1) - n) / Rational(2)}};
    for (int i = 2; i <= 5; ++i) {
      const std::string l = "L1" + std::to_string(i);
      if (in(i)) {
        // 1 + sum_j delta_ij a_j with delta_ii = -1.
        Rational c(1);
        for (int j : t) c += (i == j ? -A(j) : A(j));
        expected[l] = c / Rational(2);
      } else {
        expected[l] = (Rational(1) + n) / Rational(2);
        expected["E" + std::to_string(i)] = A(i);
      }
    }
    const auto cd = standard_contraction(s, ContractionKind::ToP2, a, 0);
    const auto cert = certificate(s, cd);
    ASSERT_EQ(by_label(cert), nonzero(expected));
    EXPECT_EQ(cert.bound, Rational(2) / (Rational(3) + Rational(2) * A(1) + n));
  };
  rec(0, values.size() - 1);
  // Every row except those shadowed by an earlier equal sum is exercised.
  EXPECT_GE(rows_hit.size(), 10u);
}

TEST(Certificate, ConicOverF1LowDegrees) {
  const Rational d(2, 5), a1(1, 2), a2(1, 3), a3(1, 4);
  {
    const SurfaceModel s(7);
    const auto cert = certificate(s, standard_contraction(s, ContractionKind::ConicBundleF1, {a1}, d));
    EXPECT_EQ(by_label(cert), (Coeffs{{"L12", Rational(3) + d}, {"E1", Rational(2) + d + a1}, {"E2", 2}}));
    EXPECT_EQ(cert.bound, Rational(1) / (Rational(3) + d));
  }
  {
    const SurfaceModel s(6);
    const auto cert =
        certificate(s, standard_contraction(s, ContractionKind::ConicBundleF1, {a1, a2}, d));
    EXPECT_EQ(by_label(cert), (Coeffs{{"L12", 2},
                                      {"L13", Rational(1) + d},
                                      {"E1", Rational(2) + d + a1},
                                      {"E2", Rational(1) + a2}}));
  }
  {
    const SurfaceModel s(5);
    const auto cert =
        certificate(s, standard_contraction(s, ContractionKind::ConicBundleF1, {a1, a2, a3}, d));
    EXPECT_EQ(by_label(cert), (Coeffs{{"L12", 1},
                                      {"L13", 1},
                                      {"L14", Rational(1) + d},
                                      {"E1", Rational(2) + d + a1},
                                      {"E2", a2},
                                      {"E3", a3}}));
    EXPECT_EQ(cert.bound, Rational(1) / (Rational(2) + d + a1));
  }
}

TEST(Certificate, QuadricLowDegrees) {
  const Rational d(2, 5), a1(1, 2), a2(1, 3), a3(1, 4);
  {
    const SurfaceModel s(7);
    const auto cert =
        certificate(s, standard_contraction(s, ContractionKind::ConicBundleP1P1, {a1}, d));
    EXPECT_EQ(by_label(cert),
              (Coeffs{{"E1", Rational(3) + a1 + d}, {"F1", Rational(2) + d}, {"F1'", 2}}));
  }
  {
    const SurfaceModel s(6);
    const auto cert =
        certificate(s, standard_contraction(s, ContractionKind::ConicBundleP1P1, {a1, a2}, d));
    EXPECT_EQ(by_label(cert), (Coeffs{{"F1", Rational(3, 2) + d},
                                      {"F1'", Rational(3, 2)},
                                      {"F2", half},
                                      {"F2'", half},
                                      {"E1", Rational(2) + d + a1},
                                      {"E2", a2}}));
  }
  {
    const SurfaceModel s(5);
    const auto cert = certificate(
        s, standard_contraction(s, ContractionKind::ConicBundleP1P1, {a1, a2, a3}, d));
    EXPECT_EQ(by_label(cert), (Coeffs{{"F1", Rational(1) + d},
                                      {"F1'", 1},
                                      {"Z23", 1},
                                      {"E1", Rational(2) + d + a1},
                                      {"E2", a2},
                                      {"E3", a3}}));
  }
}

TEST(Certificate, DegreeFourConicOverF1) {
  const SurfaceModel s(4);
  const auto values = grid(4);
  for (const auto& delta : {Rational(0), Rational(1, 3), Rational(3, 2)}) {
    for (std::size_t i = 0; i < values.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j)
        for (std::size_t k = 0; k <= j; ++k) {
          const std::vector<Rational> a{values[i], values[j], values[k], values[k] / Rational(2)};
          // N over a2, a3, a4 from the five listed sums.
          const std::vector<std::vector<int>> sets{{2}, {2, 3}, {2, 4}, {3, 4}, {2, 3, 4}};
          Rational n;
          for (const auto& set : sets) {
            Rational sum;
            for (int x : set) sum += a[x - 1];
            if (sum <= Rational(1)) n = max(n, sum);
          }
          const auto cd = standard_contraction(s, ContractionKind::ConicBundleF1, a, delta);
          const auto cert = certificate(s, cd);
          const auto c = by_label(cert);
          EXPECT_EQ(c.at("E1"), (Rational(3) + Rational(2) * a[0] + Rational(2) * delta + n) / Rational(2));
          EXPECT_EQ(cert.bound, Rational(2) / (Rational(3) + Rational(2) * a[0] + Rational(2) * delta + n));
          if (!delta.is_zero()) {
            EXPECT_TRUE(c.contains("L15=E1'"));
          }
        }
  }
}

TEST(Certificate, QuadricSubstitutionIdentities) {
  const SurfaceModel s(4);
  const auto cd = standard_contraction(s, ContractionKind::ConicBundleP1P1, {0, 0, 0, 0}, 1);
  const DivClass f = *cd.curve_c;
  DivClass g = s.anticanonical() - Rational(2) * f;
  for (const auto& e : cd.curve_e) g += e;
  g *= half;
  const auto& e = cd.curve_e;
  auto z = [&](std::size_t i, std::size_t j) { return f + g - e[0] - e[i] - e[j]; };
  const DivClass f1 = f - e[0], f1p = g - e[0];
  // -K = 3/2 E1 + 1/2 (F1 + F1' + Z23 + Z24 + Z34)
  EXPECT_EQ(s.anticanonical(),
            Rational(3, 2) * e[0] + half * (f1 + f1p + z(1, 2) + z(1, 3) + z(2, 3)));
  const DivClass base = half * (e[0] + f1 + f1p);
  EXPECT_EQ(e[1], base - half * z(1, 2) - half * z(1, 3) + half * z(2, 3));
  EXPECT_EQ(e[2], base - half * z(1, 2) + half * z(1, 3) - half * z(2, 3));
  EXPECT_EQ(e[3], base + half * z(1, 2) - half * z(1, 3) - half * z(2, 3));
}

TEST(Certificate, DegreeFourQuadricCases) {
  const SurfaceModel s(4);
  const auto values = grid(5);
  const Rational one(1), two(2);
  int cases[4] = {0, 0, 0, 0};
  for (const auto& d : {Rational(0), Rational(1, 4), Rational(2)}) {
    for (std::size_t i = 0; i < values.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j)
        for (std::size_t k = 0; k <= j; ++k)
          for (std::size_t m = 0; m <= k; ++m) {
            const Rational a1 = values[i], a2 = values[j], a3 = values[k], a4 = values[m];
            Coeffs want;
            Rational n;
            // The four displayed divisors, with the F1 coefficient carrying 2*delta.
            if (a2 + a3 <= one + a4) {
              ++cases[0];
              n = a2 + a3 + a4;
              want = {{"E1", (Rational(3) + two * a1 + two * d + n) / two},
                      {"F1", (one + two * d + n) / two},
                      {"F1'", (one + n) / two},
                      {"Z23", (one - a2 - a3 + a4) / two},
                      {"Z24", (one - a2 + a3 - a4) / two},
                      {"Z34", (one + a2 - a3 - a4) / two}};
            } else if (a2 + a4 <= one) {
              ++cases[1];
              n = a2 + a4;
              want = {{"E1", (Rational(3) + two * a1 + two * d + n) / two},
                      {"F1", (one + two * d + n) / two},
                      {"F1'", (one + n) / two},
                      {"Z23", (one - a2 + a4) / two},
                      {"Z24", (one - a2 - a4) / two},
                      {"Z34", (one + a2 - a4) / two},
                      {"E3", a3}};
            } else if (a3 + a4 <= one) {
              ++cases[2];
              n = a3 + a4;
              want = {{"E1", (Rational(3) + two * a1 + two * d + n) / two},
                      {"F1", (one + two * d + n) / two},
                      {"F1'", (one + n) / two},
                      {"Z23", (one - a3 + a4) / two},
                      {"Z24", (one + a3 - a4) / two},
                      {"Z34", (one - a3 - a4) / two},
                      {"E2", a2}};
            } else {
              ++cases[3];
              n = a2;
              want = {{"E1", (Rational(3) + two * a1 + two * d + a2) / two},
                      {"F1", (one + two * d + a2) / two},
                      {"F1'", (one + a2) / two},
                      {"Z23", (one - a2) / two},
                      {"Z24", (one - a2) / two},
                      {"Z34", (one + a2) / two},
                      {"E3", a3},
                      {"E4", a4}};
            }
            const auto cd =
                standard_contraction(s, ContractionKind::ConicBundleP1P1, {a1, a2, a3, a4}, d);
            const auto cert = certificate(s, cd);
            ASSERT_EQ(by_label(cert), nonzero(want));
            EXPECT_EQ(cert.bound, two / (Rational(3) + two * a1 + two * d + n));
          }
  }
  // The last two cases need a3 + a4 close to 1 with a2 + a3 > 1 + a4.
  EXPECT_GT(cases[0], 0);
  EXPECT_GT(cases[1], 0);
}

TEST(Slope, Examples) {
  const SurfaceModel s4(4);
  const auto cd = standard_contraction(s4, ContractionKind::ToP2, {half, 0, 0, 0, 0}, 0);
  const auto cmp = compare_with_slope(s4, cd, certificate(s4, cd));
  EXPECT_EQ(cmp.bound, half);
  EXPECT_EQ(cmp.two_thirds_nu, Rational(12, 19));
  EXPECT_TRUE(cmp.strict);

  const SurfaceModel s5(5);
  for (const auto kind : {ContractionKind::ToP2, ContractionKind::ConicBundleF1,
                          ContractionKind::ConicBundleP1P1}) {
    const bool bundle = kind != ContractionKind::ToP2;
    std::vector<Rational> a(bundle ? 3 : 4, Rational(0));
    const auto zero = standard_contraction(s5, kind, a, 0);
    EXPECT_TRUE(compare_with_slope(s5, zero, certificate(s5, zero)).strict);
    a[0] = Rational(1, 7);
    const auto cd5 = standard_contraction(s5, kind, a, bundle ? Rational(1, 9) : Rational(0));
    EXPECT_TRUE(compare_with_slope(s5, cd5, certificate(s5, cd5)).strict);
  }
}

TEST(Slope, BoundNonincreasingInA1) {
  for (int degree = 4; degree <= 7; ++degree) {
    const SurfaceModel s(degree);
    for (const auto kind : {ContractionKind::ToP2, ContractionKind::ConicBundleF1,
                            ContractionKind::ConicBundleP1P1}) {
      const bool bundle = kind != ContractionKind::ToP2;
      const std::size_t len = bundle ? s.rank() - 1 : s.rank();
      std::vector<Rational> a(len, Rational(0));
      if (len > 1) a[1] = Rational(1, 5);
      if (len > 2) a[2] = Rational(1, 6);
      Rational previous(1);
      for (long p = 1; p < 12; ++p) {
        a[0] = Rational(p, 12) < Rational(1, 5) ? Rational(1, 5) : Rational(p, 12);
        const auto cd = standard_contraction(s, kind, a, bundle ? Rational(1, 3) : Rational(0));
        const auto b = certificate(s, cd).bound;
        EXPECT_LE(b, previous) << degree << " " << to_string(kind) << " a1=" << a[0];
        previous = b;
      }
    }
  }
}

TEST(Certificate, RescaleAndVerify) {
  const SurfaceModel s(6);
  const auto cd = standard_contraction(s, ContractionKind::ToP2, {half, Rational(1, 4), 0}, 0);
  const auto cert = certificate(s, cd);
  const auto twice = rescale(cert, Rational(2));
  EXPECT_EQ(twice.bound, cert.bound / Rational(2));
  EXPECT_NO_THROW(verify_certificate(twice, Rational(2) * reconstruct(cd, s), s));
  EXPECT_THROW(verify_certificate(cert, Rational(2) * reconstruct(cd, s), s), InvariantViolation);
  auto broken = cert;
  broken.witness_index = (cert.witness_index + 1) % cert.divisor.size();
  EXPECT_THROW(verify_certificate(broken, reconstruct(cd, s), s), InvariantViolation);
  EXPECT_THROW(rescale(cert, Rational(0)), DomainError);
}

TEST(Certificate, RejectsOtherDegrees) {
  const SurfaceModel s(3);
  ContractionData cd;
  cd.a.assign(6, Rational(0));
  for (std::size_t i = 0; i < 6; ++i) cd.curve_e.push_back(s.exceptional(i));
  EXPECT_THROW(certificate(s, cd), DomainError);
  EXPECT_THROW(certificate_grid(3, 2, Rational(1)), DomainError);
}

TEST(CertificateGrid, SmallGridIsClean) {
  for (int d = 4; d <= 7; ++d) {
    const auto r = certificate_grid(d, 3, Rational(1), 5);
    EXPECT_TRUE(r.ok()) << (r.counterexamples.empty() ? "" : r.counterexamples.front());
    EXPECT_EQ(r.equality_points, d == 4 ? 3u : 0u);
    EXPECT_GT(r.per_kind[0], 0u);
    EXPECT_GT(r.per_kind[1], 0u);
    EXPECT_GT(r.per_kind[2], 0u);
    EXPECT_GT(r.decompositions_checked, 0u);
  }
  const auto a = certificate_grid(6, 3, Rational(1), 1);
  const auto b = certificate_grid(6, 3, Rational(1), 1);
  EXPECT_EQ(a.checked, b.checked);
  EXPECT_EQ(a.counterexamples, b.counterexamples);
}

}  // namespace
}  // namespace kstab
