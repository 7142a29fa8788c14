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

#include "kstab/stability.hpp"

#include "kstab/curves.hpp"
#include "kstab/error.hpp"

namespace kstab {
namespace {

void require_ample(const DivClass& l, const SurfaceModel& s) {
  s.check(l);
  if (const auto g = ampleness_witness(l, s)) {
    throw DomainError("class " + l.to_string() + " is not ample: it meets " + curve_name(*g) +
                      " in degree " + intersect(l, *g, s).to_string());
  }
  if (square(l, s).sign() <= 0) throw DomainError("class " + l.to_string() + " has L^2 <= 0");
}

DivClass sum_of(const std::vector<DivClass>& curves, const SurfaceModel& s) {
  DivClass out = s.zero();
  for (const auto& c : curves) out += c;
  return out;
}

}  // namespace

Rational nu(const DivClass& l, const SurfaceModel& s) {
  const Rational sq = square(l, s);
  if (sq.is_zero()) throw DomainError("nu: L^2 = 0");
  return anticanonical_degree(l, s) / sq;
}

bool condition_a(const DivClass& l, const SurfaceModel& s) {
  require_ample(l, s);
  return is_nef(s.anticanonical() - Rational(2, 3) * nu(l, s) * l, s);
}

DivClass normalize(const DivClass& l, const SurfaceModel& s) {
  require_ample(l, s);
  DivClass out = Rational(2, 3) * nu(l, s) * l;
  if (nu(out, s) != Rational(3, 2)) throw InvariantViolation("normalize: nu != 3/2");
  return out;
}

EpsilonData epsilon_data(const DivClass& l, const SurfaceModel& s) {
  DivClass r = s.anticanonical() - normalize(l, s);
  Rational eps = anticanonical_degree(r, s);
  return {std::move(r), std::move(eps)};
}

GammaBound gamma_lower_bound(const SurfaceModel& s, const DivClass& l) {
  if (s.degree() > 2) throw DomainError("gamma bound needs degree 1 or 2");
  if (!condition_a(l, s)) throw DomainError("gamma bound needs condition (A)");
  auto [r, eps] = epsilon_data(l, s);
  if (eps.sign() <= 0 && !r.is_zero()) {
    throw InvariantViolation("epsilon = " + eps.to_string() + " for a nonzero residual");
  }
  Rational gamma;
  if (s.degree() == 1) {
    gamma = eps >= Rational(1, 2) ? Rational(6, 5) : Rational(3) / (Rational(3) - eps);
  } else {
    gamma = eps >= Rational(1) ? Rational(12, 11) : Rational(12) / (Rational(12) - eps);
  }
  if (gamma <= Rational(1)) throw InvariantViolation("gamma <= 1");
  DivClass normalized = s.anticanonical() - r;
  const Rational alpha = gamma * Rational(2, 3) * nu(l, s);
  return {gamma, eps, std::move(normalized), alpha};
}

std::optional<SixLineMatch> match_six_line(const DivClass& l, const SurfaceModel& s) {
  if (s.degree() != 3) return std::nullopt;
  s.check(l);
  const auto& curves = minus_one_curves(s);
  const DivClass k = s.anticanonical();
  std::optional<SixLineMatch> found;
  for_each_disjoint_set(curves, 6, s, [&](std::span<const std::size_t> set) {
    std::vector<DivClass> lines;
    for (auto i : set) lines.push_back(curves[i]);
    const DivClass sigma = sum_of(lines, s);
    // l.(-K) = c(3+6x), l.sigma = 6c(1-x).
    const Rational c = (anticanonical_degree(l, s) + intersect(l, sigma, s)) / Rational(9);
    if (c.sign() <= 0) return true;
    const Rational cx = (anticanonical_degree(l, s) - Rational(3) * c) / Rational(6);
    if (c * k + cx * sigma != l) return true;
    // The same class can match several six-sets with different x; a
    // positive x is the one the family is about.
    if (!found || (found->x.sign() <= 0 && cx.sign() > 0)) {
      found = SixLineMatch{cx / c, c, std::move(lines)};
    }
    return found->x.sign() <= 0;
  });
  return found;
}

std::optional<OneLineMatch> match_one_line(const DivClass& l, const SurfaceModel& s) {
  if (s.degree() != 3) return std::nullopt;
  s.check(l);
  const DivClass k = s.anticanonical();
  for (const auto& g : minus_one_curves(s)) {
    // l.(-K) = c(3+x), l.g = c(1-x).
    const Rational c = (anticanonical_degree(l, s) + intersect(l, g, s)) / Rational(4);
    if (c.sign() <= 0) continue;
    const Rational cx = anticanonical_degree(l, s) - Rational(3) * c;
    if (cx.is_zero() || c * k + cx * g != l) continue;
    return OneLineMatch{cx / c, c, g};
  }
  return std::nullopt;
}

CubicLineReport cubic_line_family_report(const Rational& x) {
  if (x.sign() < 0 || x >= Rational(1)) throw DomainError("cubic line family needs 0 <= x < 1");
  const SurfaceModel s(3);
  const Rational one(1), two(2), three(3);
  CubicLineReport r;
  r.x = x;
  r.nu = (three + x) / (three + two * x - x * x);
  r.condition_a = x <= Rational(3, 5);
  r.alpha_upper = three / (Rational(4) + two * x);
  r.two_thirds_nu = Rational(2, 3) * r.nu;
  r.dervan_fails = r.alpha_upper <= r.two_thirds_nu;
  r.in_window = Rational(13) * x * x + two * x - three >= Rational(0) && r.condition_a;

  const DivClass l = s.anticanonical() + x * s.exceptional(0);
  if (nu(l, s) != r.nu || condition_a(l, s) != r.condition_a) {
    throw InvariantViolation("cubic line family: closed form disagrees with the lattice");
  }
  if (r.in_window != (r.condition_a && r.dervan_fails)) {
    throw InvariantViolation("cubic line family: window test disagrees with the slope comparison");
  }
  return r;
}

std::string to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::KStableByMainTheorem: return "KStableByMainTheorem";
    case VerdictStatus::KStableBySixLineTheorem: return "KStableBySixLineTheorem";
    case VerdictStatus::DervanInapplicable: return "DervanInapplicable";
    case VerdictStatus::Unsupported: return "Unsupported";
    case VerdictStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

Verdict verdict(const SurfaceModel& s, const DivClass& l) {
  require_ample(l, s);
  Verdict v;
  v.degree = s.degree();
  v.input = l;
  v.nu = nu(l, s);
  v.condition_a = condition_a(l, s);

  if (s.degree() == 8) {
    v.status = VerdictStatus::Unsupported;
    v.notes.push_back("degree 8 surfaces are outside the certified range; no certificate is produced");
    return v;
  }

  if (s.degree() <= 2) {
    if (!v.condition_a) {
      v.notes.push_back("condition (A) fails, so Dervan's criterion gives no conclusion");
      return v;
    }
    const auto g = gamma_lower_bound(s, l);
    v.status = VerdictStatus::KStableByMainTheorem;
    v.gamma = g.gamma;
    v.epsilon = g.epsilon;
    v.alpha_lower = g.alpha_lower;
    v.notes.push_back("alpha of the normalized class is at least gamma > 1, and condition (A) holds");
    return v;
  }

  if (s.degree() == 3) {
    if (const auto m = match_six_line(l, s)) {
      v.six_line_x = m->x;
      if (m->x.is_zero()) {
        v.notes.push_back(
            "L is proportional to -K; K-stability here is a known external result, not derived by this tool");
      } else if (m->x.sign() > 0 && m->x <= Rational(1, 10)) {
        v.status = VerdictStatus::KStableBySixLineTheorem;
        v.alpha_lower = Rational(2) / (Rational(3) + Rational(3) * m->x) / m->scale;
        v.notes.push_back("six disjoint lines with 0 < x <= 1/10: alpha(S, -K + x*sum) >= 2/(3+3x)");
      } else {
        v.notes.push_back("six-line family with x = " + m->x.to_string() +
                          " lies outside 0 < x <= 1/10; no verdict");
      }
      return v;
    }
    if (const auto m = match_one_line(l, s); m && m->x.sign() > 0 && m->x < Rational(1)) {
      const auto r = cubic_line_family_report(m->x);
      if (!r.condition_a) {
        v.notes.push_back("one-line family with x > 3/5: condition (A) fails");
      } else if (r.in_window) {
        v.notes.push_back("one-line family: condition (A) holds but alpha <= 3/(4+2x) <= (2/3)nu, so Dervan's criterion fails");
      } else {
        v.notes.push_back("one-line family below the window: condition (A) holds, alpha is not decided");
      }
      return v;
    }
    v.notes.push_back("cubic surface outside the six-line family; no verdict");
    return v;
  }

  // Degrees 4..7.
  const Rational m = mu(l, s);
  v.mu = m;
  const DivClass scaled = m * l;
  auto cd = face_decompose(scaled, s);
  const auto cert = certificate(s, cd);
  const auto normalized = compare_with_slope(s, cd, cert);
  v.certificate = rescale(cert, m.reciprocal());
  verify_certificate(*v.certificate, l, s);
  // Both sides scale by mu when passing from mu*l back to l.
  v.comparison = SlopeComparison{v.certificate->bound, Rational(2, 3) * v.nu, normalized.strict,
                                 normalized.equality};
  v.contraction = std::move(cd);
  v.status = VerdictStatus::DervanInapplicable;
  if (v.comparison->equality) {
    v.notes.push_back("alpha <= 2/3 = (2/3)nu with equality; this happens only in degree 4 with L proportional to -K");
  } else {
    v.notes.push_back("alpha <= bound < (2/3)nu, so Dervan's alpha condition cannot hold");
  }
  return v;
}

}  // namespace kstab
