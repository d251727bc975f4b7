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

#pragma once

// Command layer behind the g2curve tool. Each command maps one input to an
// exit code and a JSON body; the executable only parses flags and prints.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "g2/g2.hpp"
#include "g2/json.hpp"

namespace g2::cli {

using nlohmann::json;

enum ExitCode : int { kOk = 0, kInputError = 2, kDegenerate = 3, kIdentityViolation = 4 };

struct Outcome {
  int code = kOk;
  json body;
};

enum class InputKind { sextic, igusa, j, forms };

inline const char* kind_name(InputKind k) {
  switch (k) {
    case InputKind::sextic: return "sextic";
    case InputKind::igusa: return "igusa";
    case InputKind::j: return "j";
    case InputKind::forms: return "forms";
  }
  return "?";
}

struct Input {
  InputKind kind = InputKind::sextic;
  std::string text;
};

enum class Method { appendix, mestre, both };

inline Method parse_method(std::string_view s) {
  if (s == "appendix") return Method::appendix;
  if (s == "mestre") return Method::mestre;
  if (s == "both") return Method::both;
  throw InputError("unknown method '" + std::string(s) + "' (expected appendix, mestre or both)");
}

// ---- parsing -------------------------------------------------------------

/// Comma-separated rationals; the offending token is named on failure.
inline std::vector<Rational> parse_list(std::string_view text, std::size_t expected, std::string_view what) {
  std::vector<Rational> out;
  std::string token;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, token, ',')) {
    try {
      out.push_back(Rational::parse(token));
    } catch (const InputError&) {
      throw InputError("invalid token '" + token + "' in " + std::string(what));
    }
  }
  if (!text.empty() && text.back() == ',') throw InputError("trailing comma in " + std::string(what));
  if (out.size() != expected) {
    throw InputError(std::string(what) + " needs " + std::to_string(expected) + " values, got " +
                     std::to_string(out.size()));
  }
  return out;
}

/// Coefficients of x^6, x^5 y, ..., y^6.
inline RationalForm parse_sextic(std::string_view text) {
  RationalForm f(parse_list(text, 7, "--sextic"));
  if (f.is_zero()) throw InputError("the zero sextic is not a curve");
  return f;
}

inline IgusaInvariants<Rational> parse_igusa(std::string_view text) {
  auto v = parse_list(text, 4, "--igusa");
  IgusaInvariants<Rational> i{v[0], v[1], v[2], v[3]};
  if (i.is_zero()) throw InputError("the zero tuple is not a moduli point");
  return i;
}

inline AbsoluteInvariants<Rational> parse_j(std::string_view text) {
  auto v = parse_list(text, 3, "--j");
  return {v[0], v[1], v[2]};
}

inline SiegelFormValues parse_forms(std::string_view text) {
  auto v = parse_list(text, 4, "--forms");
  return {v[0], v[1], v[2], v[3], std::nullopt};
}

/// The representative [1 : j2/j1 : j3/j1 : 1/j1] of the point [j1, j2, j3, 1].
inline IgusaInvariants<Rational> igusa_from_absolute(const AbsoluteInvariants<Rational>& j) {
  if (j.j1.is_zero()) throw DegenerateError(Locus::formula_pole, "formula pole at j1 = 0");
  return {Rational(1), j.j2 / j.j1, j.j3 / j.j1, inverse(j.j1)};
}

inline IgusaInvariants<Rational> igusa_of(const Input& in) {
  switch (in.kind) {
    case InputKind::sextic: return igusa_from_sextic(parse_sextic(in.text));
    case InputKind::igusa: return parse_igusa(in.text);
    case InputKind::j: return igusa_from_absolute(parse_j(in.text));
    case InputKind::forms: return igusa_from_siegel(parse_forms(in.text));
  }
  throw InputError("unsupported input");
}

// ---- error routing -------------------------------------------------------

inline Outcome guarded(const std::function<Outcome()>& body) {
  try {
    return body();
  } catch (const InputError& e) {
    return {kInputError, {{"error", e.what()}, {"kind", "input"}}};
  } catch (const DegenerateError& e) {
    return {kDegenerate, {{"error", e.what()}, {"kind", "degenerate"}, {"locus", std::string(locus_name(e.locus()))}}};
  } catch (const UnfactoredRadicand& e) {
    return {kDegenerate, {{"error", e.what()}, {"kind", "unfactored_radicand"}}};
  } catch (const IdentityViolation& e) {
    return {kIdentityViolation, {{"error", e.what()}, {"kind", "identity_violation"}}};
  } catch (const ArithmeticError& e) {
    return {kDegenerate, {{"error", e.what()}, {"kind", "arithmetic"}}};
  } catch (const std::exception& e) {
    return {kIdentityViolation, {{"error", e.what()}, {"kind", "internal"}}};
  }
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw IdentityViolation("identity violated: " + what);
}

// ---- commands ------------------------------------------------------------

/// Full invariant report of a sextic (or of a given Igusa/j tuple).
inline Outcome run_invariants(const Input& in) {
  return guarded([&] {
    json body;
    IgusaInvariants<Rational> igusa;
    if (in.kind == InputKind::sextic) {
      RationalForm f = parse_sextic(in.text);
      MestreQuadrics<Rational> q = mestre_quadrics(f);
      ClebschInvariants<Rational> c = clebsch_from_sextic(f);
      require(constant_value(transvectant(q.y2, q.y2, 2)) == c.D, "(y1,y3)_2 = (y2,y2)_2");
      Rational r = quadric_determinant_R(q);
      require(r * r == i30_from_clebsch(c), "R^2 = I30");
      igusa = igusa_from_clebsch(c);
      body["sextic"] = g2::json::to_json(f);
      body["R"] = r.str();
    } else {
      igusa = igusa_of(in);
    }
    ModuliPoint p(igusa);
    body["invariants"] = g2::json::to_json(p);
    ClassificationReport cls = classify(p);
    require(cls.d_squared == d_squared_from_igusa(igusa), "d^2 = -2 D I30");
    body["d2"] = cls.d_squared.str();
    body["flags"] = g2::json::to_json(cls);
    return Outcome{kOk, body};
  });
}

namespace detail {

inline void check_conjugate_pair(const CurvePair& pair) {
  for (std::size_t k = 0; k <= 6; ++k) require(pair.minus[k] == pair.plus[k].conjugate(), "C- = conjugate(C+)");
}

inline IgusaInvariants<Rational> checked_igusa(const Input& in, json& body) {
  IgusaInvariants<Rational> igusa = igusa_of(in);
  if (in.kind == InputKind::j) {
    AbsoluteInvariants<Rational> j = parse_j(in.text);
    Rational d2 = d_squared_from_absolute(j);
    require(d2 == d_squared_from_igusa(igusa), "d^2 from absolute invariants = d^2 from Igusa invariants");
    body["d2_from_j"] = d2.str();
  }
  return igusa;
}

}  // namespace detail

/// The curve pair over the minimal field of definition.
inline Outcome run_reconstruct(const Input& in, Method method) {
  return guarded([&] {
    json body;
    IgusaInvariants<Rational> igusa = detail::checked_igusa(in, body);
    ModuliPoint p(igusa);
    const auto& c = p.clebsch();
    body["invariants"] = g2::json::to_json(p);
    body["d2"] = (Rational(-2) * c.D * p.i30()).str();

    std::optional<CurvePair> app, mes;
    std::optional<DegenerateError> app_err, mes_err;
    if (method != Method::mestre) {
      try {
        app = appendix_curve_pair(c);
        detail::check_conjugate_pair(*app);
        body["appendix"] = g2::json::to_json(*app);
      } catch (const DegenerateError& e) {
        app_err = e;
      }
    }
    if (method != Method::appendix) {
      try {
        mes = mestre_curve_pair(c);
        detail::check_conjugate_pair(*mes);
        body["mestre"] = g2::json::to_json(*mes);
        body["conic"] = g2::json::to_json(ConicModel(c));
        body["cubic"] = g2::json::to_json(cubic_coefficients(c));
      } catch (const DegenerateError& e) {
        mes_err = e;
        if (e.locus() == Locus::d_locus) body["advisory"] = "D = 0: the conic route is undefined, use --method appendix";
      }
    }
    if (method == Method::both && app && mes) {
      auto sp = proportionality_scalar(mes->plus, app->plus);
      auto sm = proportionality_scalar(mes->minus, app->minus);
      body["proportional"] = sp.has_value() && sm.has_value();
      body["pairing"] = "plus-plus";
      if (sp) body["scalar_plus"] = g2::json::to_json(*sp);
      if (sm) body["scalar_minus"] = g2::json::to_json(*sm);
      require(sp.has_value() && sm.has_value(), "conic-cubic sextic proportional to the closed form");
    }
    bool have_any = app.has_value() || mes.has_value();
    if (!have_any) {
      const DegenerateError& e = app_err ? *app_err : *mes_err;
      body["error"] = e.what();
      body["kind"] = "degenerate";
      body["locus"] = std::string(locus_name(e.locus()));
      body["field"] = classify(p).minimal_field;
      return Outcome{kDegenerate, body};
    }
    if (app_err) body["appendix_error"] = {{"error", app_err->what()}, {"locus", std::string(locus_name(app_err->locus()))}};
    if (mes_err) body["mestre_error"] = {{"error", mes_err->what()}, {"locus", std::string(locus_name(mes_err->locus()))}};
    return Outcome{kOk, body};
  });
}

/// Invariants -> both constructions -> invariants again.
inline Outcome run_roundtrip(const Input& in, bool timings = true) {
  return guarded([&] {
    using clock = std::chrono::steady_clock;
    json body;
    IgusaInvariants<Rational> igusa = igusa_of(in);
    if (igusa.I10.is_zero()) {
      return Outcome{kDegenerate, {{"status", "skip"}, {"reason", "I10 = 0: not a genus-two curve"}}};
    }
    ModuliPoint p(igusa);
    body["invariants"] = g2::json::to_json(p.igusa());
    bool any = false;
    bool all_equal = true;
    auto check = [&](const char* name, const std::function<CurvePair()>& build) {
      auto t0 = clock::now();
      json r;
      try {
        CurvePair pair = build();
        bool eq_plus = moduli_points_equal(igusa, igusa_from_sextic(pair.plus));
        bool eq_minus = moduli_points_equal(igusa, igusa_from_sextic(pair.minus));
        r = {{"plus", eq_plus}, {"minus", eq_minus}, {"field", pair.field.extension}};
        any = true;
        all_equal = all_equal && eq_plus && eq_minus;
      } catch (const DegenerateError& e) {
        r = {{"skipped", std::string(locus_name(e.locus()))}, {"reason", e.what()}};
      }
      if (timings) {
        r["ms"] = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
      }
      body[name] = r;
    };
    check("appendix", [&] { return appendix_curve_pair(p.clebsch()); });
    check("mestre", [&] { return mestre_curve_pair(p.clebsch()); });
    if (!any) {
      body["status"] = "skip";
      return Outcome{kDegenerate, body};
    }
    body["status"] = all_equal ? "pass" : "fail";
    return Outcome{all_equal ? kOk : kIdentityViolation, body};
  });
}

inline Outcome run_classify(const Input& in) {
  return guarded([&] {
    ModuliPoint p(igusa_of(in));
    json body = g2::json::to_json(classify(p));
    body["invariants"] = g2::json::to_json(p);
    return Outcome{kOk, body};
  });
}

/// Dictionary from generator values to Igusa invariants, with the chi35^2
/// and D-locus identities checked.
inline Outcome run_siegel(const Input& in) {
  return guarded([&] {
    if (in.kind != InputKind::forms) throw InputError("siegel needs --forms psi4,psi6,chi10,chi12");
    SiegelFormValues v = parse_forms(in.text);
    json body;
    body["forms"] = g2::json::to_json(v);
    Rational chi35 = chi35_squared_from_generators(v);
    body["chi35_squared"] = chi35.str();
    body["Q"] = q_polynomial(v).str();
    Rational quintic = d_locus_quintic(v);
    body["quintic"] = quintic.str();
    IgusaInvariants<Rational> igusa = igusa_from_siegel(v);
    if (!v.chi12.is_zero()) body["ratios"] = g2::json::to_json(siegel_ratios(v));
    ModuliPoint p(igusa);
    body["invariants"] = g2::json::to_json(p);
    using g2::detail::pp;
    Rational rhs = Rational(-1) * pp(3, 18) * pp(5, 20) / pp(2, 74) * pow(igusa.I10, 4) * p.i30();
    require(chi35 == rhs, "chi35^2 = -(3^18 5^20 / 2^74) I10^4 I30");
    Rational d_from_quintic = Rational(8) * quintic / (pp(3, 9) * pp(5, 10) * pow(v.chi10, 5));
    require(d_from_quintic == p.clebsch().D, "D = 2^3/(3^9 5^10) quintic/chi10^5");
    if (!igusa.I2.is_zero()) {
      IgusaInvariants<Rational> w = weighted_coordinates(v);
      require(moduli_points_equal(w, igusa), "weighted coordinates represent the moduli point");
      body["weighted_coordinates"] = g2::json::to_json(w);
    }
    body["checks"] = {{"chi35_identity", true}, {"quintic_vs_D", true}};
    return Outcome{kOk, body};
  });
}

// ---- batch ---------------------------------------------------------------

/// Splits "kind:payload"; lines without a prefix use `fallback`.
inline Input parse_batch_line(const std::string& line, InputKind fallback) {
  static const std::pair<const char*, InputKind> prefixes[] = {
      {"sextic:", InputKind::sextic}, {"igusa:", InputKind::igusa}, {"j:", InputKind::j}, {"forms:", InputKind::forms}};
  for (const auto& [p, k] : prefixes) {
    std::string_view pv(p);
    if (line.rfind(pv, 0) == 0) return {k, line.substr(pv.size())};
  }
  return {fallback, line};
}

/// Non-empty, non-comment lines of a batch file.
inline std::vector<std::string> batch_lines(std::istream& is) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(is, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

/// Runs `fn` over all inputs on a small thread pool and returns outcomes in
/// input order. Each job writes only its own slot.
inline std::vector<Outcome> run_parallel(const std::vector<Input>& inputs, const std::function<Outcome(const Input&)>& fn,
                                         unsigned threads = 0) {
  std::vector<Outcome> out(inputs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, inputs.size())));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < inputs.size(); i = next++) out[i] = fn(inputs[i]);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

/// Batch exit code: 4 if any item violated an identity, else 2 if any item
/// was malformed, else 0. Degenerate items are reported, not fatal.
inline Outcome summarize_batch(const std::vector<Input>& inputs, const std::vector<Outcome>& results) {
  json items = json::array();
  std::size_t ok = 0, input = 0, degenerate = 0, violation = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    json item = results[i].body;
    item["line"] = i + 1;
    item["input"] = std::string(kind_name(inputs[i].kind)) + ":" + inputs[i].text;
    item["exit_code"] = results[i].code;
    items.push_back(item);
    switch (results[i].code) {
      case kOk: ++ok; break;
      case kInputError: ++input; break;
      case kDegenerate: ++degenerate; break;
      default: ++violation; break;
    }
  }
  json summary = {{"total", results.size()}, {"ok", ok}, {"skipped", degenerate}, {"input_errors", input},
                  {"violations", violation}};
  int code = violation ? kIdentityViolation : (input ? kInputError : kOk);
  return {code, {{"results", items}, {"summary", summary}}};
}

// ---- text rendering ------------------------------------------------------

inline void render_text(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      render_text(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace g2::cli
