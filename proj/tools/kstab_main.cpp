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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kstab/appendix.hpp"
#include "kstab/cones.hpp"
#include "kstab/error.hpp"
#include "kstab/report.hpp"
#include "kstab/stability.hpp"

namespace {

using kstab::Json;

std::string load_document(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return arg;
  std::ifstream in(arg);
  if (!in) throw kstab::DomainError("cannot read input file " + arg);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Json& j, const std::string& text, bool json) {
  if (json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kstab: exact K-stability checks for polarized del Pezzo surfaces"};
  app.require_subcommand(1);

  bool json = false;
  std::optional<int> degree;
  std::string input;
  std::string x_text;
  int max_denominator = 4;
  std::string delta_max_text = "1";
  bool fibers = false;

  auto add_class_options = [&](CLI::App* cmd) {
    cmd->add_option("--degree", degree, "degree K^2 (1..8)");
    cmd->add_option("--L", input, "class file or inline JSON")->required();
    cmd->add_flag("--json", json, "JSON output");
  };

  auto* check = app.add_subcommand("check", "K-stability verdict for (S, L)");
  add_class_options(check);
  auto* alpha = app.add_subcommand("alpha-bound", "alpha-invariant certificate, degree 4..7");
  add_class_options(alpha);
  auto* mu = app.add_subcommand("mu", "normalization constant mu_L");
  add_class_options(mu);

  auto* curves = app.add_subcommand("curves", "list (-1)-curves or fiber classes");
  curves->add_option("--degree", degree, "degree K^2 (1..8)")->required();
  curves->add_flag("--fibers", fibers, "list conic fiber classes instead");
  curves->add_flag("--json", json, "JSON output");

  auto* cubic = app.add_subcommand("example-cubic", "the cubic family -K + x*E1");
  cubic->add_option("--x", x_text, "x in [0, 1) as p/q")->required();
  cubic->add_flag("--json", json, "JSON output");

  auto* appendix = app.add_subcommand("verify-appendix", "grid check of the two inequalities");
  appendix->add_option("--max-denominator", max_denominator, "grid denominator q >= 1");
  appendix->add_option("--delta-max", delta_max_text, "largest delta as p/q");
  appendix->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (check->parsed()) {
      const auto in = kstab::parse_input_text(load_document(input), degree);
      const auto v = kstab::verdict(in.model, in.l);
      emit(kstab::to_json(v), kstab::to_text(v), json);
    } else if (alpha->parsed()) {
      const auto in = kstab::parse_input_text(load_document(input), degree);
      const auto r = kstab::alpha_bound_report(in.model, in.l);
      emit(kstab::to_json(r), kstab::to_text(r), json);
    } else if (mu->parsed()) {
      const auto in = kstab::parse_input_text(load_document(input), degree);
      const auto m = kstab::mu(in.l, in.model);
      emit(kstab::mu_json(in.model, in.l, m), kstab::mu_text(in.model, in.l, m), json);
    } else if (curves->parsed()) {
      const kstab::SurfaceModel s(*degree);
      emit(kstab::curves_json(s, fibers), kstab::curves_text(s, fibers), json);
    } else if (cubic->parsed()) {
      const auto r = kstab::cubic_line_family_report(kstab::Rational::parse(x_text));
      emit(kstab::to_json(r), kstab::to_text(r), json);
    } else if (appendix->parsed()) {
      if (max_denominator < 1) throw kstab::DomainError("--max-denominator must be >= 1");
      const auto r = kstab::grid_oracle(max_denominator, kstab::Rational::parse(delta_max_text));
      emit(kstab::to_json(r), kstab::to_text(r), json);
      return r.ok() ? 0 : 2;
    }
  } catch (const kstab::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const kstab::InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
