// Copyright 2026 The g2pair Authors
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

// g2curve: command-line front end for the g2pair library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "g2/cli/commands.hpp"

namespace {

using g2::cli::Input;
using g2::cli::InputKind;
using g2::cli::Outcome;

struct Options {
  std::string sextic, igusa, j, forms, batch, out;
  std::string method = "appendix";
  std::string format = "json";
  unsigned threads = 0;
  bool no_timings = false;
};

void add_input_flags(CLI::App* cmd, Options& o, bool sextic, bool igusa, bool j, bool forms) {
  if (sextic) cmd->add_option("--sextic", o.sextic, "coefficients of x^6, x^5 y, ..., y^6 (comma separated)");
  if (igusa) cmd->add_option("--igusa", o.igusa, "I2,I4,I6,I10");
  if (j) cmd->add_option("--j", o.j, "j1,j2,j3");
  if (forms) cmd->add_option("--forms", o.forms, "psi4,psi6,chi10,chi12");
  cmd->add_option("--batch", o.batch, "file with one input per line (optional kind: prefix)");
  cmd->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", o.out, "write the report to this file instead of stdout");
  cmd->add_option("--threads", o.threads, "worker threads for --batch (0 = all cores)");
}

int emit(const Outcome& r, const Options& o) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) {
      std::cerr << "cannot open " << o.out << " for writing\n";
      return g2::cli::kInputError;
    }
    os = &file;
  }
  if (o.format == "text") {
    g2::cli::render_text(r.body, "", *os);
  } else {
    *os << r.body.dump(2) << "\n";
  }
  if (r.code != 0 && r.body.contains("error")) std::cerr << "g2curve: " << r.body["error"].get<std::string>() << "\n";
  return r.code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus-two curves from moduli points: invariants, reconstruction, classification"};
  app.require_subcommand(1);
  Options o;

  auto* inv = app.add_subcommand("invariants", "Igusa, Clebsch and absolute invariants, I30, d^2, flags");
  add_input_flags(inv, o, true, true, true, false);
  auto* rec = app.add_subcommand("reconstruct", "the curve pair C+/C- over the minimal field of definition");
  add_input_flags(rec, o, true, true, true, false);
  rec->add_option("--method", o.method, "appendix, mestre or both")->check(CLI::IsMember({"appendix", "mestre", "both"}));
  auto* rt = app.add_subcommand("roundtrip", "reconstruct and compare the moduli points");
  add_input_flags(rt, o, true, true, true, false);
  rt->add_flag("--no-timings", o.no_timings, "omit timings (byte-identical output across runs)");
  auto* cls = app.add_subcommand("classify", "special loci and the minimal field of definition");
  add_input_flags(cls, o, true, true, true, false);
  auto* sg = app.add_subcommand("siegel", "Igusa invariants and identities from Siegel form values");
  add_input_flags(sg, o, false, false, false, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : g2::cli::kInputError;
  }

  CLI::App* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();
  InputKind fallback = name == "siegel" ? InputKind::forms
                       : (name == "reconstruct" || name == "classify") ? InputKind::igusa
                                                                       : InputKind::sextic;

  std::vector<Input> given;
  if (!o.sextic.empty()) given.push_back({InputKind::sextic, o.sextic});
  if (!o.igusa.empty()) given.push_back({InputKind::igusa, o.igusa});
  if (!o.j.empty()) given.push_back({InputKind::j, o.j});
  if (!o.forms.empty()) given.push_back({InputKind::forms, o.forms});
  int sources = static_cast<int>(given.size()) + (o.batch.empty() ? 0 : 1);
  if (sources != 1) {
    return emit({g2::cli::kInputError, {{"error", "exactly one input source is required"}, {"kind", "input"}}}, o);
  }

  std::function<Outcome(const Input&)> run;
  if (name == "invariants") {
    run = g2::cli::run_invariants;
  } else if (name == "reconstruct") {
    g2::cli::Method m = g2::cli::parse_method(o.method);
    run = [m](const Input& in) { return g2::cli::run_reconstruct(in, m); };
  } else if (name == "roundtrip") {
    bool timings = !o.no_timings;
    run = [timings](const Input& in) { return g2::cli::run_roundtrip(in, timings); };
  } else if (name == "classify") {
    run = g2::cli::run_classify;
  } else {
    run = g2::cli::run_siegel;
  }

  if (o.batch.empty()) return emit(run(given.front()), o);

  std::ifstream in(o.batch);
  if (!in) return emit({g2::cli::kInputError, {{"error", "cannot read " + o.batch}, {"kind", "input"}}}, o);
  std::vector<Input> inputs;
  for (const auto& line : g2::cli::batch_lines(in)) inputs.push_back(g2::cli::parse_batch_line(line, fallback));
  auto results = g2::cli::run_parallel(inputs, run, o.threads);
  return emit(g2::cli::summarize_batch(inputs, results), o);
}
