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

#ifndef KSTAB_REPORT_HPP_
#define KSTAB_REPORT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kstab/alphabound.hpp"
#include "kstab/appendix.hpp"
#include "kstab/cones.hpp"
#include "kstab/lattice.hpp"
#include "kstab/stability.hpp"

namespace kstab {

using Json = nlohmann::ordered_json;

struct ParsedInput {
  SurfaceModel model;
  DivClass l;
  std::string family;  // "class", "six-line" or "anticanonical-plus"
  Json echo;           // {"degree": d, "L": {...}}; parses back to the same class
};

/// Accepts
///   {"degree": d, "L": {"h": "p/q", "e": [...]}}
///   {"degree": 3, "family": "six-line", "x": "p/q"}
///   {"degree": d, "family": "anticanonical-plus", "delta": "p/q", "a": [...]
///    [, "kind": "ToP2" | "F1" | "P1xP1"]}
/// Rationals may be strings or integers. `degree` overrides or must agree
/// with the document. The class must be ample; otherwise the DomainError names
/// the offending (-1)-curve. Throws DomainError on any malformed field.
ParsedInput parse_input(const Json& doc, std::optional<int> degree = std::nullopt);
ParsedInput parse_input_text(std::string_view text, std::optional<int> degree = std::nullopt);

Rational rational_from_json(const Json& j);
Json to_json(const Rational& r);
Json to_json(const DivClass& c);
DivClass class_from_json(const Json& j, const SurfaceModel& s);

Json to_json(const Certificate& cert);
Json to_json(const ContractionData& cd);
Json to_json(const Verdict& v);
std::string to_text(const Verdict& v);

struct AlphaBoundReport {
  int degree = 0;
  DivClass input = DivClass::zero(0);
  Rational mu;
  ContractionData contraction;
  Certificate certificate;  // for the input class
  SlopeComparison comparison;
};
/// Degree 4..7 only.
AlphaBoundReport alpha_bound_report(const SurfaceModel& s, const DivClass& l);
Json to_json(const AlphaBoundReport& r);
std::string to_text(const AlphaBoundReport& r);

Json curves_json(const SurfaceModel& s, bool fibers);
std::string curves_text(const SurfaceModel& s, bool fibers);

Json mu_json(const SurfaceModel& s, const DivClass& l, const Rational& mu);
std::string mu_text(const SurfaceModel& s, const DivClass& l, const Rational& mu);

Json to_json(const CubicLineReport& r);
std::string to_text(const CubicLineReport& r);

Json to_json(const AppendixGridReport& r);
std::string to_text(const AppendixGridReport& r);

}  // namespace kstab

#endif  // KSTAB_REPORT_HPP_
