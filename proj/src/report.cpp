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

#include "kstab/report.hpp"

#include <sstream>

#include "kstab/curves.hpp"
#include "kstab/error.hpp"

namespace kstab {
namespace {

int degree_from(const Json& doc, std::optional<int> degree) {
  std::optional<int> in_doc;
  if (doc.contains("degree")) {
    if (!doc["degree"].is_number_integer()) throw DomainError("\"degree\" must be an integer");
    in_doc = doc["degree"].get<int>();
  }
  if (degree && in_doc && *degree != *in_doc) {
    throw DomainError("--degree " + std::to_string(*degree) + " disagrees with document degree " +
                      std::to_string(*in_doc));
  }
  if (degree) return *degree;
  if (in_doc) return *in_doc;
  throw DomainError("no degree given");
}

std::vector<Rational> rational_list(const Json& j, const char* field) {
  if (!j.is_array()) throw DomainError(std::string("\"") + field + "\" must be an array");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

const Json& field(const Json& doc, const char* name) {
  if (!doc.contains(name)) throw DomainError(std::string("missing field \"") + name + "\"");
  return doc[name];
}

DivClass expand_anticanonical_plus(const Json& doc, const SurfaceModel& s) {
  const Rational delta = rational_from_json(field(doc, "delta"));
  const auto a = rational_list(field(doc, "a"), "a");
  const std::size_t r = s.rank();
  std::string kind = a.size() == r ? "ToP2" : "F1";
  if (doc.contains("kind")) {
    if (!doc["kind"].is_string()) throw DomainError("\"kind\" must be a string");
    kind = doc["kind"].get<std::string>();
  }
  DivClass l = s.anticanonical();
  if (kind == "ToP2") {
    if (a.size() != r) throw DomainError("ToP2 needs " + std::to_string(r) + " values in \"a\"");
    if (!delta.is_zero()) throw DomainError("ToP2 needs delta = 0");
    for (std::size_t i = 0; i < r; ++i) l += a[i] * s.exceptional(i);
    return l;
  }
  if (r < 2 || a.size() != r - 1) {
    throw DomainError(kind + " needs " + std::to_string(r - 1) + " values in \"a\"");
  }
  if (kind == "F1") {
    for (std::size_t i = 0; i + 1 < r; ++i) l += a[i] * s.exceptional(i);
    return l + delta * (s.line() - s.exceptional(r - 1));
  }
  if (kind == "P1xP1") {
    l += a[0] * (s.line() - s.exceptional(0) - s.exceptional(1));
    for (std::size_t i = 1; i < a.size(); ++i) l += a[i] * s.exceptional(i + 1);
    return l + delta * (s.line() - s.exceptional(0));
  }
  throw DomainError("unknown kind \"" + kind + "\"");
}

// "3H - E1 - 1/2E2", "E1", "0".
std::string class_text(const DivClass& c) {
  std::string out;
  auto term = [&](const Rational& coeff, const std::string& name) {
    if (coeff.is_zero()) return;
    const bool neg = coeff.sign() < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const Rational a = coeff.abs();
    if (a != Rational(1)) out += a.to_string();
    out += name;
  };
  term(c.h(), "H");
  for (std::size_t i = 0; i < c.rank(); ++i) term(c.e(i), "E" + std::to_string(i + 1));
  return out.empty() ? "0" : out;
}

Json optional_json(const std::optional<Rational>& r) { return r ? to_json(*r) : Json(nullptr); }

std::string join_notes(const std::vector<std::string>& notes) {
  std::string out;
  for (const auto& n : notes) out += "note: " + n + "\n";
  return out;
}

std::string component_line(const CertificateComponent& c, bool witness) {
  std::ostringstream os;
  os << "  " << c.coefficient << " * " << c.label << " = " << class_text(c.curve);
  if (witness) os << "  <- witness";
  os << "\n";
  return os.str();
}

std::string certificate_text(const Certificate& cert) {
  std::ostringstream os;
  os << "certificate:\n";
  for (std::size_t i = 0; i < cert.divisor.size(); ++i) {
    os << component_line(cert.divisor[i], i == cert.witness_index);
  }
  os << "alpha upper bound: " << cert.bound << "\n";
  return os.str();
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw DomainError("expected a rational as \"p/q\" string or integer, got " + j.dump());
}

Json to_json(const Rational& r) { return r.to_string(); }

// Files list point multiplicities: {"h": h, "e": [m1, ...]} is h*H - sum m_i*E_i.
Json to_json(const DivClass& c) {
  Json e = Json::array();
  for (const auto& x : c.e()) e.push_back(to_json(-x));
  return Json{{"h", to_json(c.h())}, {"e", e}};
}

DivClass class_from_json(const Json& j, const SurfaceModel& s) {
  if (!j.is_object()) throw DomainError("class must be an object with \"h\" and \"e\"");
  auto m = rational_list(field(j, "e"), "e");
  for (auto& x : m) x = -x;
  DivClass c(rational_from_json(field(j, "h")), std::move(m));
  s.check(c);
  return c;
}

ParsedInput parse_input(const Json& doc, std::optional<int> degree) {
  if (!doc.is_object()) throw DomainError("input must be a JSON object");
  // A bare class file {"h": ..., "e": [...]}; the degree comes from the caller.
  if (doc.contains("h") && !doc.contains("L") && !doc.contains("family")) {
    return parse_input(Json{{"L", doc}}, degree);
  }
  const SurfaceModel s(degree_from(doc, degree));
  std::string family = "class";
  DivClass l = s.zero();
  if (doc.contains("family")) {
    if (!doc["family"].is_string()) throw DomainError("\"family\" must be a string");
    family = doc["family"].get<std::string>();
    if (family == "six-line") {
      if (s.degree() != 3) throw DomainError("the six-line family lives in degree 3");
      const Rational x = rational_from_json(field(doc, "x"));
      l = s.anticanonical();
      for (std::size_t i = 0; i < 6; ++i) l += x * s.exceptional(i);
    } else if (family == "anticanonical-plus") {
      l = expand_anticanonical_plus(doc, s);
    } else {
      throw DomainError("unknown family \"" + family + "\"");
    }
  } else {
    l = class_from_json(field(doc, "L"), s);
  }
  if (const auto g = ampleness_witness(l, s)) {
    throw DomainError("L = " + class_text(l) + " is not ample: L." + curve_name(*g) + " = " +
                      intersect(l, *g, s).to_string());
  }
  if (square(l, s).sign() <= 0) throw DomainError("L = " + class_text(l) + " is not ample: L^2 <= 0");
  Json echo{{"degree", s.degree()}, {"L", to_json(l)}};
  return {s, std::move(l), std::move(family), std::move(echo)};
}

ParsedInput parse_input_text(std::string_view text, std::optional<int> degree) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
  return parse_input(doc, degree);
}

Json to_json(const Certificate& cert) {
  Json parts = Json::array();
  for (const auto& c : cert.divisor) {
    parts.push_back(Json{{"label", c.label},
                         {"curve", curve_name(c.curve)},
                         {"class", to_json(c.curve)},
                         {"coefficient", to_json(c.coefficient)}});
  }
  return Json{{"components", parts},
              {"witness_index", cert.witness_index},
              {"witness", cert.divisor.at(cert.witness_index).label},
              {"bound", to_json(cert.bound)}};
}

Json to_json(const ContractionData& cd) {
  Json a = Json::array();
  for (const auto& x : cd.a) a.push_back(to_json(x));
  Json curves = Json::array();
  for (const auto& c : cd.curve_e) curves.push_back(curve_name(c));
  return Json{{"kind", to_string(cd.kind)},
              {"delta", to_json(cd.delta)},
              {"a", a},
              {"curves", curves},
              {"fiber", cd.curve_c ? Json(curve_name(*cd.curve_c)) : Json(nullptr)}};
}

Json to_json(const Verdict& v) {
  Json out{{"input", Json{{"degree", v.degree}, {"L", to_json(v.input)}}},
           {"status", to_string(v.status)},
           {"condition_a", v.condition_a},
           {"nu", to_json(v.nu)},
           {"gamma", optional_json(v.gamma)},
           {"epsilon", optional_json(v.epsilon)},
           {"alpha_lower", optional_json(v.alpha_lower)},
           {"six_line_x", optional_json(v.six_line_x)},
           {"mu", optional_json(v.mu)},
           {"contraction", v.contraction ? to_json(*v.contraction) : Json(nullptr)},
           {"certificate", v.certificate ? to_json(*v.certificate) : Json(nullptr)}};
  if (v.comparison) {
    out["comparison"] = Json{{"bound", to_json(v.comparison->bound)},
                             {"two_thirds_nu", to_json(v.comparison->two_thirds_nu)},
                             {"strict", v.comparison->strict},
                             {"equality", v.comparison->equality}};
  } else {
    out["comparison"] = nullptr;
  }
  out["notes"] = v.notes;
  return out;
}

std::string to_text(const Verdict& v) {
  std::ostringstream os;
  os << "degree: " << v.degree << "\n"
     << "L: " << class_text(v.input) << "\n"
     << "status: " << to_string(v.status) << "\n"
     << "nu: " << v.nu << "\n"
     << "condition (A): " << (v.condition_a ? "holds" : "fails") << "\n";
  switch (v.status) {
    case VerdictStatus::KStableByMainTheorem:
      os << "criterion: Dervan's criterion, alpha(S, L') >= gamma > 1 on the normalized class\n"
         << "gamma: " << *v.gamma << "\n"
         << "epsilon: " << *v.epsilon << "\n"
         << "alpha(S, L) >= " << *v.alpha_lower << "\n";
      break;
    case VerdictStatus::KStableBySixLineTheorem:
      os << "criterion: six-line theorem for cubic surfaces\n"
         << "x: " << *v.six_line_x << "\n"
         << "alpha(S, L) >= " << *v.alpha_lower << "\n";
      break;
    case VerdictStatus::DervanInapplicable:
      os << "criterion: alpha bound for degree >= 4, Dervan's criterion does not apply\n"
         << "mu: " << *v.mu << "\n"
         << "contraction: " << to_string(v.contraction->kind) << "\n"
         << certificate_text(*v.certificate)
         << "(2/3)nu: " << v.comparison->two_thirds_nu << "\n"
         << "comparison: " << (v.comparison->equality ? "equality" : "strict") << "\n";
      break;
    case VerdictStatus::Unsupported:
    case VerdictStatus::Unknown:
      if (v.six_line_x) os << "six-line x: " << *v.six_line_x << "\n";
      break;
  }
  os << join_notes(v.notes);
  return os.str();
}

AlphaBoundReport alpha_bound_report(const SurfaceModel& s, const DivClass& l) {
  if (s.degree() < 4 || s.degree() > 7) throw DomainError("alpha-bound needs degree 4..7");
  AlphaBoundReport r;
  r.degree = s.degree();
  r.input = l;
  r.mu = mu(l, s);
  r.contraction = face_decompose(r.mu * l, s);
  const auto cert = certificate(s, r.contraction);
  const auto cmp = compare_with_slope(s, r.contraction, cert);
  r.certificate = rescale(cert, r.mu.reciprocal());
  verify_certificate(r.certificate, l, s);
  r.comparison = SlopeComparison{r.certificate.bound, Rational(2, 3) * nu(l, s), cmp.strict, cmp.equality};
  return r;
}

Json to_json(const AlphaBoundReport& r) {
  return Json{{"input", Json{{"degree", r.degree}, {"L", to_json(r.input)}}},
              {"mu", to_json(r.mu)},
              {"contraction", to_json(r.contraction)},
              {"certificate", to_json(r.certificate)},
              {"two_thirds_nu", to_json(r.comparison.two_thirds_nu)},
              {"strict", r.comparison.strict},
              {"equality", r.comparison.equality}};
}

std::string to_text(const AlphaBoundReport& r) {
  std::ostringstream os;
  os << "degree: " << r.degree << "\n"
     << "L: " << class_text(r.input) << "\n"
     << "mu: " << r.mu << "\n"
     << "contraction: " << to_string(r.contraction.kind) << " delta=" << r.contraction.delta << "\n"
     << certificate_text(r.certificate)
     << "(2/3)nu: " << r.comparison.two_thirds_nu << "\n"
     << "comparison: " << (r.comparison.equality ? "equality" : "strict") << "\n";
  return os.str();
}

Json curves_json(const SurfaceModel& s, bool fibers) {
  const auto& list = fibers ? fiber_classes(s) : minus_one_curves(s);
  Json items = Json::array();
  for (const auto& c : list) items.push_back(Json{{"name", curve_name(c)}, {"class", to_json(c)}});
  return Json{{"degree", s.degree()},
              {"type", fibers ? "fiber" : "minus-one"},
              {"count", list.size()},
              {"curves", items}};
}

std::string curves_text(const SurfaceModel& s, bool fibers) {
  const auto& list = fibers ? fiber_classes(s) : minus_one_curves(s);
  std::ostringstream os;
  os << "degree " << s.degree() << ": " << list.size() << (fibers ? " fiber classes" : " (-1)-curves")
     << "\n";
  for (const auto& c : list) os << curve_name(c) << "\n";
  return os.str();
}

Json mu_json(const SurfaceModel& s, const DivClass& l, const Rational& m) {
  return Json{{"input", Json{{"degree", s.degree()}, {"L", to_json(l)}}},
              {"mu", to_json(m)},
              {"rescaled", to_json(m * l)}};
}

std::string mu_text(const SurfaceModel& s, const DivClass& l, const Rational& m) {
  std::ostringstream os;
  os << "degree: " << s.degree() << "\nL: " << class_text(l) << "\nmu: " << m << "\nmu*L: " << class_text(m * l) << "\n";
  return os.str();
}

Json to_json(const CubicLineReport& r) {
  return Json{{"x", to_json(r.x)},
              {"nu", to_json(r.nu)},
              {"condition_a", r.condition_a},
              {"alpha_upper", to_json(r.alpha_upper)},
              {"two_thirds_nu", to_json(r.two_thirds_nu)},
              {"dervan_fails", r.dervan_fails},
              {"in_window", r.in_window}};
}

std::string to_text(const CubicLineReport& r) {
  std::ostringstream os;
  os << "x: " << r.x << "\n"
     << "nu: " << r.nu << "\n"
     << "condition (A): " << (r.condition_a ? "holds" : "fails") << " (holds iff x <= 3/5)\n"
     << "alpha upper bound: " << r.alpha_upper << "\n"
     << "(2/3)nu: " << r.two_thirds_nu << "\n"
     << "window [(-1+2*sqrt(10))/13, 3/5]: " << (r.in_window ? "inside" : "outside") << "\n";
  if (r.in_window) os << "condition (A) holds but alpha <= (2/3)nu; Dervan's criterion fails\n";
  return os.str();
}

Json to_json(const AppendixGridReport& r) {
  return Json{{"max_denominator", r.max_denominator},
              {"delta_max", to_json(r.delta_max)},
              {"inputs", r.inputs},
              {"passed", r.passed},
              {"equality_cases", r.equality_cases},
              {"equality_off_slice", r.equality_off_slice},
              {"counterexamples", r.counterexamples},
              {"ok", r.ok()}};
}

std::string to_text(const AppendixGridReport& r) {
  std::ostringstream os;
  os << "grid: a_i in {0, 1/" << r.max_denominator << ", ..., 1}, delta in [0, " << r.delta_max
     << "]\n"
     << "inputs: " << r.inputs << "\n"
     << "passed: " << r.passed << "\n"
     << "equality cases: " << r.equality_cases << " (off the a1 = delta = 0 slice: "
     << r.equality_off_slice << ")\n"
     << "counterexamples: " << r.counterexamples.size() << "\n";
  for (const auto& c : r.counterexamples) os << "  " << c << "\n";
  os << (r.ok() ? "OK" : "FAILED") << "\n";
  return os.str();
}

}  // namespace kstab
