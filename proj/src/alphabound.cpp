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

#include <algorithm>
#include <functional>
#include <sstream>
#include <utility>

#include "kstab/appendix.hpp"
#include "kstab/curves.hpp"
#include "kstab/error.hpp"
#include "kstab/parallel.hpp"

namespace kstab {
namespace {

const Rational kHalf(1, 2);

std::string index_label(const char* stem, std::size_t i) {
  return stem + std::to_string(i + 1);
}

std::string pair_label(const char* stem, std::size_t i, std::size_t j) {
  return stem + std::to_string(i + 1) + std::to_string(j + 1);
}

bool is_minus_one_curve(const DivClass& c, const SurfaceModel& s) {
  return c.is_integral() && square(c, s) == Rational(-1) &&
         anticanonical_degree(c, s) == Rational(1);
}

// Blow-down of the normal form to P^2: line class H' and the r contracted
// curves. For F1 the last point is the section of the conic bundle.
struct PlaneFrame {
  DivClass line;
  std::vector<DivClass> points;

  DivClass join(std::size_t i, std::size_t j) const { return line - points[i] - points[j]; }
  DivClass conic() const {
    DivClass c = Rational(2) * line;
    for (const auto& p : points) c -= p;
    return c;
  }
};

PlaneFrame plane_frame(const SurfaceModel& s, const ContractionData& cd) {
  PlaneFrame f{s.zero(), cd.curve_e};
  if (cd.kind == ContractionKind::ConicBundleF1) {
    const auto& curves = minus_one_curves(s);
    const auto it = std::find_if(curves.begin(), curves.end(), [&](const DivClass& v) {
      if (intersect(v, *cd.curve_c, s) != Rational(1)) return false;
      return std::all_of(cd.curve_e.begin(), cd.curve_e.end(),
                         [&](const DivClass& e) { return intersect(v, e, s).is_zero(); });
    });
    if (it == curves.end()) throw InvariantViolation("F1 normal form without a section curve");
    f.points.push_back(*it);
  }
  DivClass sum = s.anticanonical();
  for (const auto& p : f.points) sum += p;
  f.line = Rational(1, 3) * sum;
  bool ok = f.line.is_integral() && square(f.line, s) == Rational(1);
  for (const auto& p : f.points) ok = ok && intersect(f.line, p, s).is_zero();
  if (cd.kind == ContractionKind::ConicBundleF1) {
    ok = ok && *cd.curve_c == f.line - f.points.back();
  }
  if (!ok) throw InvariantViolation("contracted curves do not blow down to P^2");
  return f;
}

// Blow-down to P^1 x P^1: rulings f = C and g, plus the contracted curves.
struct QuadricFrame {
  DivClass f, g;
  std::vector<DivClass> points;

  DivClass fiber(std::size_t i) const { return f - points[i]; }
  DivClass cofiber(std::size_t i) const { return g - points[i]; }
  // (1,1)-curve through the images of points 0, i and j.
  DivClass bidegree11(std::size_t i, std::size_t j) const {
    return f + g - points[0] - points[i] - points[j];
  }
};

QuadricFrame quadric_frame(const SurfaceModel& s, const ContractionData& cd) {
  QuadricFrame q{*cd.curve_c, s.zero(), cd.curve_e};
  DivClass sum = s.anticanonical() - Rational(2) * q.f;
  for (const auto& p : q.points) sum += p;
  q.g = kHalf * sum;
  bool ok = q.g.is_integral() && square(q.g, s).is_zero() && intersect(q.f, q.g, s) == Rational(1);
  for (const auto& p : q.points) ok = ok && intersect(q.g, p, s).is_zero();
  if (!ok) throw InvariantViolation("contracted curves do not blow down to P^1 x P^1");
  return q;
}

class DivisorBuilder {
 public:
  void add(std::string label, DivClass curve, Rational coefficient) {
    for (auto& c : parts_) {
      if (c.curve == curve) {
        if (c.label != label) c.label += "=" + label;
        c.coefficient += coefficient;
        return;
      }
    }
    parts_.push_back({std::move(label), std::move(curve), std::move(coefficient)});
  }

  Certificate finish(const SurfaceModel& s, const DivClass& target) {
    Certificate cert;
    for (auto& c : parts_) {
      if (c.coefficient.sign() < 0) {
        throw InvariantViolation("certificate component " + c.label + " has negative coefficient " +
                                 c.coefficient.to_string());
      }
      if (!c.coefficient.is_zero()) cert.divisor.push_back(std::move(c));
    }
    if (cert.divisor.empty()) throw InvariantViolation("empty certificate");
    for (std::size_t i = 1; i < cert.divisor.size(); ++i) {
      if (cert.divisor[i].coefficient > cert.divisor[cert.witness_index].coefficient) {
        cert.witness_index = i;
      }
    }
    cert.bound = cert.divisor[cert.witness_index].coefficient.reciprocal();
    verify_certificate(cert, target, s);
    return cert;
  }

 private:
  std::vector<CertificateComponent> parts_;
};

Rational subset_sum(std::span<const Rational> values, const std::vector<std::size_t>& set) {
  Rational out;
  for (auto i : set) out += values[i];
  return out;
}

// Degree 4 blow-down to P^2. `a` holds a1..a5 (a5 = 0 for F1) and `chosen`
// the positions (into a) of the sum realizing N. The divisor is
//   (3+2a1+N)/2 E1 + (1-N)/2 Z + sum_i c_i L1i + sum_{i not chosen} a_i E_i
// with c_i = (1+N-2a_i)/2 for chosen i and (1+N)/2 otherwise: the base
// decomposition of L with each chosen a_j E_j replaced through
// E_j = (E1 - Z + sum_{i != j} L1i - L1j)/2.
void add_quartic_plane_divisor(DivisorBuilder& b, const PlaneFrame& f,
                               const std::vector<Rational>& a,
                               const std::vector<std::size_t>& chosen) {
  const Rational n = subset_sum(a, chosen);
  b.add("E1", f.points[0], (Rational(3) + Rational(2) * a[0] + n) * kHalf);
  b.add("Z", f.conic(), (Rational(1) - n) * kHalf);
  for (std::size_t i = 1; i < 5; ++i) {
    const bool in = std::find(chosen.begin(), chosen.end(), i) != chosen.end();
    const Rational c = in ? (Rational(1) + n - Rational(2) * a[i]) * kHalf
                          : (Rational(1) + n) * kHalf;
    b.add(pair_label("L", 0, i), f.join(0, i), c);
    if (!in) b.add(index_label("E", i), f.points[i], a[i]);
  }
}

std::vector<std::size_t> shift(const std::vector<std::size_t>& set) {
  std::vector<std::size_t> out;
  for (auto i : set) out.push_back(i + 1);
  return out;
}

Certificate plane_certificate(const SurfaceModel& s, const ContractionData& cd,
                              const DivClass& target) {
  const PlaneFrame f = plane_frame(s, cd);
  const bool f1 = cd.kind == ContractionKind::ConicBundleF1;
  const Rational& d = cd.delta;
  std::vector<Rational> a = cd.a;
  if (f1) a.push_back(Rational(0));  // the section carries no coefficient
  const Rational one(1), two(2), three(3);
  DivisorBuilder b;
  auto point = [&](std::size_t i, Rational c) { b.add(index_label("E", i), f.points[i], std::move(c)); };
  auto join = [&](std::size_t j, Rational c) { b.add(pair_label("L", 0, j), f.join(0, j), std::move(c)); };

  switch (s.degree()) {
    case 7:
      join(1, three + d);
      point(0, two + d + a[0]);
      point(1, two + a[1]);
      break;
    case 6:
      join(1, two);
      join(2, one + d);
      point(0, two + d + a[0]);
      point(1, one + a[1]);
      point(2, a[2]);
      break;
    case 5:
      join(1, one);
      join(2, one);
      join(3, one + d);
      point(0, two + d + a[0]);
      for (std::size_t i = 1; i < 4; ++i) point(i, a[i]);
      break;
    case 4: {
      const std::span<const Rational> tail(a.data() + 1, f1 ? 3 : 4);
      const auto& family = f1 ? conic_family() : blowdown_family();
      const auto pick = admissible_argmax(tail, family);
      add_quartic_plane_divisor(b, f, a, pick ? shift(family[*pick]) : std::vector<std::size_t>{});
      if (f1) {
        // delta*C = delta*E1 + delta*E1' with E1' = C - E1.
        point(0, d);
        b.add("E1'", *cd.curve_c - f.points[0], d);
      }
      break;
    }
    default:
      throw DomainError("certificates exist for degrees 4..7 only");
  }
  return b.finish(s, target);
}

Certificate quadric_certificate(const SurfaceModel& s, const ContractionData& cd,
                                const DivClass& target) {
  const QuadricFrame q = quadric_frame(s, cd);
  const auto& a = cd.a;
  const Rational& d = cd.delta;
  const Rational one(1), two(2), three(3);
  DivisorBuilder b;
  auto point = [&](std::size_t i, Rational c) { b.add(index_label("E", i), q.points[i], std::move(c)); };
  auto fiber = [&](std::size_t i, Rational c) { b.add(index_label("F", i), q.fiber(i), std::move(c)); };
  auto cofiber = [&](std::size_t i, Rational c) {
    b.add(index_label("F", i) + "'", q.cofiber(i), std::move(c));
  };
  auto z = [&](std::size_t i, std::size_t j, Rational c) {
    b.add(pair_label("Z", i, j), q.bidegree11(i, j), std::move(c));
  };

  switch (s.degree()) {
    case 7:
      point(0, three + a[0] + d);
      fiber(0, two + d);
      cofiber(0, two);
      break;
    case 6:
      fiber(0, Rational(3, 2) + d);
      cofiber(0, Rational(3, 2));
      fiber(1, kHalf);
      cofiber(1, kHalf);
      point(0, two + d + a[0]);
      point(1, a[1]);
      break;
    case 5:
      fiber(0, one + d);
      cofiber(0, one);
      z(1, 2, one);
      point(0, two + d + a[0]);
      point(1, a[1]);
      point(2, a[2]);
      break;
    case 4: {
      // Positions into a of the substituted E_j, chosen in the fixed order
      // a2+a3 <= 1+a4, a2+a4 <= 1, a3+a4 <= 1, otherwise a2 alone.
      std::vector<std::size_t> chosen;
      if (a[1] + a[2] <= one + a[3]) {
        chosen = {1, 2, 3};
      } else if (a[1] + a[3] <= one) {
        chosen = {1, 3};
      } else if (a[2] + a[3] <= one) {
        chosen = {2, 3};
      } else {
        chosen = {1};
      }
      const Rational n = subset_sum(a, chosen);
      auto in = [&](std::size_t j) { return std::find(chosen.begin(), chosen.end(), j) != chosen.end(); };
      point(0, (three + two * a[0] + two * d + n) * kHalf);
      fiber(0, (one + two * d + n) * kHalf);
      cofiber(0, (one + n) * kHalf);
      const std::size_t pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
      for (const auto& p : pairs) {
        Rational c = one;
        for (std::size_t j = 1; j < 4; ++j) {
          if (!in(j)) continue;
          c += (j == p[0] || j == p[1]) ? -a[j] : a[j];
        }
        z(p[0], p[1], c * kHalf);
      }
      for (std::size_t j = 1; j < 4; ++j) {
        if (!in(j)) point(j, a[j]);
      }
      break;
    }
    default:
      throw DomainError("certificates exist for degrees 4..7 only");
  }
  return b.finish(s, target);
}

Rational two_thirds_slope(const DivClass& l, const SurfaceModel& s) {
  return Rational(2, 3) * anticanonical_degree(l, s) / square(l, s);
}

std::string describe(const ContractionData& cd) {
  std::ostringstream os;
  os << to_string(cd.kind) << " a=(";
  for (std::size_t i = 0; i < cd.a.size(); ++i) os << (i ? "," : "") << cd.a[i];
  os << ") delta=" << cd.delta;
  return os.str();
}

std::vector<Rational> farey_below_one(int max_denominator) {
  std::vector<Rational> v;
  for (long q = 1; q <= max_denominator; ++q)
    for (long p = 0; p < q; ++p) v.emplace_back(p, q);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Rational> farey_up_to(int max_denominator, const Rational& limit) {
  std::vector<Rational> v;
  for (long q = 1; q <= max_denominator; ++q)
    for (long p = 0; Rational(p, q) <= limit; ++p) v.emplace_back(p, q);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Nonincreasing tuples of the given length drawn from ascending `values`.
void nonincreasing_tuples(const std::vector<Rational>& values, std::size_t length,
                          std::vector<std::vector<Rational>>& out) {
  std::vector<std::size_t> idx(length, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t cap) {
    if (pos == length) {
      std::vector<Rational> t;
      for (auto i : idx) t.push_back(values[i]);
      out.push_back(std::move(t));
      return;
    }
    for (std::size_t i = 0; i <= cap; ++i) {
      idx[pos] = i;
      rec(pos + 1, i);
    }
  };
  if (!values.empty()) rec(0, values.size() - 1);
}

}  // namespace

const IndexFamily& blowdown_family() {
  static const IndexFamily family = {{0},       {0, 1},    {0, 2},    {0, 3},
                                     {1, 2},    {1, 3},    {2, 3},    {0, 1, 2},
                                     {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 1, 2, 3}};
  return family;
}

const IndexFamily& conic_family() {
  static const IndexFamily family = {{0}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
  return family;
}

std::optional<std::size_t> admissible_argmax(std::span<const Rational> values,
                                             const IndexFamily& family) {
  for (const auto& x : values) {
    if (x.sign() < 0) throw DomainError("largest_admissible_sum: negative value");
  }
  std::optional<std::size_t> best;
  Rational best_sum;
  for (std::size_t k = 0; k < family.size(); ++k) {
    for (auto i : family[k]) {
      if (i >= values.size()) throw DomainError("largest_admissible_sum: index out of range");
    }
    const Rational sum = subset_sum(values, family[k]);
    if (sum > Rational(1)) continue;
    if (!best || sum > best_sum) {
      best = k;
      best_sum = sum;
    }
  }
  return best;
}

Rational largest_admissible_sum(std::span<const Rational> values, const IndexFamily& family) {
  const auto k = admissible_argmax(values, family);
  return k ? subset_sum(values, family[*k]) : Rational(0);
}

Certificate certificate(const SurfaceModel& s, const ContractionData& cd) {
  if (s.degree() < 4 || s.degree() > 7) {
    throw DomainError("certificates exist for degrees 4..7 only, got " + std::to_string(s.degree()));
  }
  validate(cd, s);
  const DivClass target = reconstruct(cd, s);
  return cd.kind == ContractionKind::ConicBundleP1P1 ? quadric_certificate(s, cd, target)
                                                     : plane_certificate(s, cd, target);
}

DivClass divisor_class(const Certificate& cert, const SurfaceModel& s) {
  DivClass sum = s.zero();
  for (const auto& c : cert.divisor) sum += c.coefficient * c.curve;
  return sum;
}

void verify_certificate(const Certificate& cert, const DivClass& target, const SurfaceModel& s) {
  if (cert.divisor.empty() || cert.witness_index >= cert.divisor.size()) {
    throw InvariantViolation("certificate has no witness component");
  }
  for (std::size_t i = 0; i < cert.divisor.size(); ++i) {
    const auto& c = cert.divisor[i];
    if (c.coefficient.sign() < 0) throw InvariantViolation("certificate coefficient < 0");
    if (!is_minus_one_curve(c.curve, s)) {
      throw InvariantViolation("certificate component " + c.label + " " + c.curve.to_string() +
                               " is not a (-1)-curve");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (cert.divisor[j].curve == c.curve) throw InvariantViolation("duplicate certificate component");
    }
    if (c.coefficient > cert.divisor[cert.witness_index].coefficient) {
      throw InvariantViolation("witness is not a maximal-coefficient component");
    }
  }
  if (cert.bound != cert.divisor[cert.witness_index].coefficient.reciprocal()) {
    throw InvariantViolation("certificate bound is not 1/(max coefficient)");
  }
  if (divisor_class(cert, s) != target) {
    throw InvariantViolation("certificate divisor " + divisor_class(cert, s).to_string() +
                             " differs from " + target.to_string());
  }
}

Certificate rescale(const Certificate& cert, const Rational& factor) {
  if (factor.sign() <= 0) throw DomainError("rescale: factor must be positive");
  Certificate out = cert;
  for (auto& c : out.divisor) c.coefficient *= factor;
  out.bound /= factor;
  return out;
}

SlopeComparison compare_with_slope(const SurfaceModel& s, const ContractionData& cd,
                                   const Certificate& cert) {
  const DivClass l = reconstruct(cd, s);
  SlopeComparison out{cert.bound, two_thirds_slope(l, s), false, false};
  out.strict = out.bound < out.two_thirds_nu;
  out.equality = out.bound == out.two_thirds_nu;
  const bool zero_data = cd.delta.is_zero() &&
                         std::all_of(cd.a.begin(), cd.a.end(), [](const Rational& x) { return x.is_zero(); });
  const bool equality_allowed = s.degree() == 4 && zero_data;
  if (equality_allowed ? !out.equality : !out.strict) {
    throw InvariantViolation("slope comparison fails for " + describe(cd) + ": bound " +
                             out.bound.to_string() + " vs (2/3)nu " + out.two_thirds_nu.to_string());
  }

  if (s.degree() == 4) {
    AppendixInput in{{Rational(0), Rational(0), Rational(0), Rational(0), Rational(0)}, cd.delta};
    for (std::size_t i = 0; i < cd.a.size(); ++i) in.a[i] = cd.a[i];
    const auto check = prop_a1(in);
    const bool quadric = cd.kind == ContractionKind::ConicBundleP1P1;
    const Rational& lhs = quadric ? check.lhs2 : check.lhs1;
    const Rational& rhs = quadric ? check.rhs2 : check.rhs1;
    const bool strict = quadric ? check.strict2 : check.strict1;
    if (lhs != out.bound || rhs != out.two_thirds_nu || strict != out.strict) {
      throw InvariantViolation("inequality evaluator disagrees for " + describe(cd) + ": " +
                               lhs.to_string() + " vs " + rhs.to_string());
    }
  }
  return out;
}

CertificateGridReport certificate_grid(int degree, int max_denominator, const Rational& delta_max,
                                       std::size_t decompose_stride) {
  const SurfaceModel s(degree);
  if (degree < 4 || degree > 7) throw DomainError("certificate grid needs degree 4..7");
  if (max_denominator < 1) throw DomainError("certificate grid: max_denominator must be >= 1");
  const auto values = farey_below_one(max_denominator);
  const auto deltas = farey_up_to(max_denominator, delta_max);
  const std::size_t r = s.rank();

  struct Task {
    ContractionKind kind;
    std::vector<Rational> a;
    Rational delta;
  };
  std::vector<Task> tasks;
  const ContractionKind kinds[] = {ContractionKind::ToP2, ContractionKind::ConicBundleF1,
                                   ContractionKind::ConicBundleP1P1};
  for (auto kind : kinds) {
    std::vector<std::vector<Rational>> tuples;
    const bool bundle = kind != ContractionKind::ToP2;
    nonincreasing_tuples(values, bundle ? r - 1 : r, tuples);
    for (auto& t : tuples) {
      if (!bundle) {
        tasks.push_back({kind, t, Rational(0)});
        continue;
      }
      for (const auto& d : deltas) tasks.push_back({kind, t, d});
    }
  }

  struct Outcome {
    bool equality = false;
    bool decomposed = false;
    std::string failure;
  };
  std::vector<Outcome> outcomes(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) {
    const auto& task = tasks[i];
    auto& out = outcomes[i];
    try {
      const auto cd = standard_contraction(s, task.kind, task.a, task.delta);
      const auto cert = certificate(s, cd);
      const auto cmp = compare_with_slope(s, cd, cert);
      out.equality = cmp.equality;
      if (decompose_stride != 0 && i % decompose_stride == 0) {
        const DivClass l = reconstruct(cd, s);
        const auto found = face_decompose(l, s);
        const auto again = certificate(s, found);
        const auto cmp2 = compare_with_slope(s, found, again);
        if (cmp2.two_thirds_nu != cmp.two_thirds_nu) {
          throw InvariantViolation("recovered normal form changes the slope");
        }
        out.decomposed = true;
      }
    } catch (const std::exception& err) {
      std::ostringstream os;
      os << to_string(task.kind) << " a=(";
      for (std::size_t k = 0; k < task.a.size(); ++k) os << (k ? "," : "") << task.a[k];
      os << ") delta=" << task.delta << ": " << err.what();
      out.failure = os.str();
    }
  });

  CertificateGridReport report;
  report.degree = degree;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    ++report.checked;
    ++report.per_kind[static_cast<int>(tasks[i].kind)];
    if (outcomes[i].equality) ++report.equality_points;
    if (outcomes[i].decomposed) ++report.decompositions_checked;
    if (!outcomes[i].failure.empty()) report.counterexamples.push_back(outcomes[i].failure);
  }
  std::sort(report.counterexamples.begin(), report.counterexamples.end());
  return report;
}

}  // namespace kstab
