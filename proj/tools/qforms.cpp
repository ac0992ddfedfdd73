// Copyright 2026 The quotient-forms Authors
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

// qforms: census, verification suites and product operations on regular
// quotient presentations.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qforms/catalog.hpp"
#include "qforms/errors.hpp"
#include "qforms/io.hpp"
#include "qforms/suites.hpp"

using namespace qforms;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitSchema = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitNotAProduct = 4;
constexpr int kExitNotSmooth = 5;

const char* const kGrammar =
    "Ring elements: terms c*name^k*name... joined by + or -. c is an integer, a\n"
    "fraction a/b over Z_(p), or {c0,c1,...} (coefficients in the power basis)\n"
    "over F_{p^n}; 0 is zero. Forms: {\"entries\": [[i, j, \"elem\"], ...]} with\n"
    "0-based indices. Tensors: {\"base\": NAME, \"terms\": [{\"I\": [..], \"J\": [..],\n"
    "\"w\": \"elem\"}]}. FORM and TENSOR arguments take a file name or inline JSON.\n\n"
    "Exit codes: 0 ok, 1 a check failed, 2 invalid input, 3 unsupported\n"
    "parameters, 4 not a product, 5 map not smooth.";

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnsupportedParams:
      return kExitUnsupported;
    case ErrorCode::kNotAProduct:
      return kExitNotAProduct;
    case ErrorCode::kNotSmooth:
      return kExitNotSmooth;
    default:
      return kExitSchema;
  }
}

struct Source {
  std::string spectrum;
  std::string input;
  int p = 2;
  int n = 1;
  std::optional<int> window;
};

struct Loaded {
  PresentationDocument doc;
  std::optional<CatalogEntry> entry;
};

Loaded load(const Source& s) {
  if (!s.input.empty() && !s.spectrum.empty()) throw Error(ErrorCode::kInvalidArgument, "give --spectrum or --input, not both");
  if (!s.input.empty()) return {presentation_from_json(load_json(s.input)), std::nullopt};
  if (s.spectrum.empty()) throw Error(ErrorCode::kInvalidArgument, "one of --spectrum or --input is required");
  CatalogEntry e = get(s.spectrum, {s.p, s.n, s.window});
  return {document_from_catalog(e), e};
}

void add_source(CLI::App* cmd, Source& s) {
  cmd->add_option("--spectrum", s.spectrum, "catalog entry: kn, k2per, pn, bp, muj2, hfp");
  cmd->add_option("--p", s.p, "prime (2, 3 or 5)");
  cmd->add_option("--n", s.n, "height (1..4)");
  cmd->add_option("--window", s.window, "number of sequence generators kept for pn, bp, hfp");
  cmd->add_option("--input", s.input, "presentation document (file or inline JSON)");
}

ProductTensor tensor_arg(const Loaded& l, const std::string& arg) {
  if (arg.empty()) return l.doc.base_tensor();
  return tensor_from_json(load_json(arg), l.doc.presentation, l.doc.base);
}

BilinearForm form_arg(const ModulePtr& module, const std::string& arg) { return form_from_json(load_json(arg), module); }

std::string count_text(const Count& c) {
  if (c.is_infinite()) return "infinite (" + c.witness() + ")";
  return c.to_string();
}

void print_census(const CensusReport& r) {
  std::cout << "instance: " << r.instance << "\n";
  std::cout << "bilinear forms: " << count_text(r.bil) << "\n";
  std::cout << "alternating: " << count_text(r.alt) << "\n";
  std::cout << "antisymmetric: " << count_text(r.asym) << "\n";
  std::cout << "products: " << count_text(r.products) << "\n";
  std::cout << "classes: " << count_text(r.classes) << "\n";
  std::cout << "commutative: " << count_text(r.commutative) << "\n";
  std::cout << "commutative classes: " << count_text(r.commutative_classes) << "\n";
  if (r.commutative_witness) std::cout << "commutative witness: " << r.commutative_witness->to_string() << "\n";
  if (r.cross_checked) std::cout << "enumeration cross-check: " << (*r.cross_checked ? "agrees" : "DISAGREES") << "\n";
  if (r.window_only) std::cout << "counts are for the window only\n";
  if (r.family) {
    std::cout << "witness family: " << r.family->description << "\n";
    for (const std::string& s : r.family->sample) std::cout << "  " << s << "\n";
  }
  for (const std::string& n : r.notes) std::cout << "note: " << n << "\n";
}

int cmd_census(const Source& s, bool json) {
  const Loaded l = load(s);
  CensusReport r;
  if (l.entry) {
    r = l.entry->run_census();
  } else {
    CensusOptions opt;
    opt.window_only = l.doc.window_only;
    r = census(l.doc.base_tensor(), opt);
  }
  if (json) {
    std::cout << census_to_json(r).dump(2) << "\n";
  } else {
    print_census(r);
  }
  return r.cross_checked == false ? kExitFail : kExitOk;
}

int cmd_verify(const std::string& suite, bool json) {
  const ReproReport r = run_suite(suite);
  if (json) {
    Json out{{"suite", r.title}, {"pass", r.pass()}, {"checks", Json::array()}};
    for (const ReproCheck& c : r.checks)
      out["checks"].push_back({{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
    std::cout << out.dump(2) << "\n";
  } else {
    std::size_t passed = 0;
    for (const ReproCheck& c : r.checks) {
      passed += c.pass ? 1 : 0;
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.computed;
      if (!c.pass) std::cout << " (expected " << c.expected << ")";
      std::cout << "\n";
    }
    std::cout << r.title << ": " << passed << "/" << r.checks.size() << " checks passed\n";
  }
  return r.pass() ? kExitOk : kExitFail;
}

int cmd_act(const Source& s, const std::string& tensor, const std::string& beta) {
  const Loaded l = load(s);
  const ProductTensor t = tensor_arg(l, tensor);
  std::cout << tensor_to_json(act(form_arg(l.doc.presentation->module(), beta), t)).dump(2) << "\n";
  return kExitOk;
}

int cmd_opposite(const Source& s, const std::string& tensor) {
  const Loaded l = load(s);
  std::cout << tensor_to_json(opposite(tensor_arg(l, tensor))).dump(2) << "\n";
  return kExitOk;
}

int cmd_equiv(const Source& s, const std::string& tensor, const std::string& other, bool use_opposite) {
  const Loaded l = load(s);
  const ProductTensor t1 = tensor_arg(l, tensor);
  if (use_opposite == !other.empty()) throw Error(ErrorCode::kInvalidArgument, "give exactly one of --other or --opposite");
  const ProductTensor t2 = use_opposite ? opposite(t1) : tensor_arg(l, other);
  const EquivalenceResult r = equivalence(t1, t2);
  Json out{{"equivalent", r.equivalent}, {"difference", form_to_json(r.difference)}};
  out["alternating_difference"] = classify_form(r.difference).alternating;
  out["witness"] = r.witness ? endo_to_json(*r.witness) : Json(nullptr);
  out["witness_verified"] = r.witness_verified;
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_diag(const Source& s, const std::string& tensor, const std::string& beta, std::uint64_t bound) {
  const Loaded l = load(s);
  if (!tensor.empty() && !beta.empty()) throw Error(ErrorCode::kInvalidArgument, "give --tensor or --beta, not both");
  const ProductTensor t = beta.empty() ? tensor_arg(l, tensor)
                                       : act(form_arg(l.doc.presentation->module(), beta), l.doc.base_tensor());
  const DiagonalizabilityResult r = diagonalizability(t, bound);
  Json out{{"verdict", diag_verdict_name(r.verdict)}, {"characteristic_form", form_to_json(r.characteristic)}};
  out["characteristic_matrix"] = matrix_to_json(r.characteristic.matrix());
  out["change_of_basis"] = r.change_of_basis ? matrix_to_json(*r.change_of_basis) : Json(nullptr);
  out["degree_obstruction"] = r.degree_obstruction;
  out["candidates"] = r.candidates;
  out["reason"] = r.reason;
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_map(int p, int n, std::optional<int> window, const std::string& beta, const std::string& gamma, bool family) {
  const MapData m = window ? bp_to_pn(p, n, *window) : bp_to_pn(p, n, twist_window(p, n));
  const std::optional<BilinearForm> b =
      beta.empty() ? std::nullopt : std::optional<BilinearForm>(form_arg(m.source->module(), beta));
  const std::optional<BilinearForm> g =
      gamma.empty() ? std::nullopt : std::optional<BilinearForm>(form_arg(m.target->module(), gamma));
  const MultiplicativityResult r = map_multiplicativity(m, b, g);
  Json out{{"source", m.source->name()}, {"target", m.target->name()}};
  out["smoothness"] = {{"smooth", r.smoothness.smooth}, {"rank", r.smoothness.rank}, {"caveat", r.smoothness.caveat}};
  out["multiplicative"] = r.multiplicative;
  out["base_changed"] = form_to_json(r.base_changed);
  out["relative"] = form_to_json(r.relative);
  out["pulled_back"] = form_to_json(r.pulled_back);
  if (family) {
    const WitnessFamily f = pn_twist_family(m.target, p, n);
    Json members = Json::array();
    for (const BilinearForm& twist : f.members) {
      members.push_back({{"gamma", form_to_json(twist)},
                         {"pullback_zero", pull_back(twist, m.pi).is_zero()},
                         {"multiplicative", map_multiplicativity(m, std::nullopt, twist).multiplicative}});
    }
    out["family"] = {{"description", f.description},
                     {"sample", f.sample},
                     {"pairwise_non_equivalent", pairwise_non_equivalent(f.members)},
                     {"members", members}};
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_export(const Source& s) {
  std::cout << presentation_to_json(load(s).doc).dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Products on regular quotients: census, verification and product operations"};
  app.footer(kGrammar);
  app.require_subcommand(1);
  bool json = false;
  Source source;
  std::string tensor, beta, gamma, other, suite;
  bool use_opposite = false, family = false;
  std::uint64_t bound = 1000000;
  std::optional<int> map_window;

  CLI::App* census_cmd = app.add_subcommand("census", "count products, classes and commutative products");
  add_source(census_cmd, source);
  census_cmd->add_flag("--json", json, "print the report as JSON");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", suite, "identities, orbit-oracle, transforms or catalog")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify_cmd->add_flag("--json", json, "print the results as JSON");

  CLI::App* act_cmd = app.add_subcommand("act", "twist a tensor by a bilinear form");
  add_source(act_cmd, source);
  act_cmd->add_option("--tensor", tensor, "tensor (default: the base product)");
  act_cmd->add_option("--beta", beta, "bilinear form")->required();

  CLI::App* opposite_cmd = app.add_subcommand("opposite", "opposite product");
  add_source(opposite_cmd, source);
  opposite_cmd->add_option("--tensor", tensor, "tensor (default: the base product)");

  CLI::App* equiv_cmd = app.add_subcommand("equiv", "decide equivalence of two products");
  add_source(equiv_cmd, source);
  equiv_cmd->add_option("--tensor", tensor, "first tensor (default: the base product)");
  equiv_cmd->add_option("--other", other, "second tensor");
  equiv_cmd->add_flag("--opposite", use_opposite, "compare with the opposite product");

  CLI::App* diag_cmd = app.add_subcommand("diag", "diagonalizability of the characteristic form");
  add_source(diag_cmd, source);
  diag_cmd->add_option("--tensor", tensor, "tensor (default: the base product)");
  diag_cmd->add_option("--beta", beta, "use act(beta, base)");
  diag_cmd->add_option("--bound", bound, "candidate bound of the graded search");

  CLI::App* map_cmd = app.add_subcommand("map", "multiplicativity of the quotient map BP -> P(n)");
  map_cmd->add_option("--p", source.p, "prime (2, 3 or 5)");
  map_cmd->add_option("--n", source.n, "height (1..4)");
  map_cmd->add_option("--window", map_window, "keep the first W admissible x_i (default: a window containing the twist family)");
  map_cmd->add_option("--beta", beta, "twist of BP");
  map_cmd->add_option("--gamma", gamma, "twist of P(n)");
  map_cmd->add_flag("--family", family, "check the twist family gamma_e of P(n)");

  CLI::App* export_cmd = app.add_subcommand("export", "print a catalog entry as a presentation document");
  add_source(export_cmd, source);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitSchema;
  }

  try {
    if (*census_cmd) return cmd_census(source, json);
    if (*verify_cmd) return cmd_verify(suite, json);
    if (*act_cmd) return cmd_act(source, tensor, beta);
    if (*opposite_cmd) return cmd_opposite(source, tensor);
    if (*equiv_cmd) return cmd_equiv(source, tensor, other, use_opposite);
    if (*diag_cmd) return cmd_diag(source, tensor, beta, bound);
    if (*map_cmd) return cmd_map(source.p, source.n, map_window, beta, gamma, family);
    if (*export_cmd) return cmd_export(source);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  }
  return kExitOk;
}
