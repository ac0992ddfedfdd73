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

#include "qforms/io.hpp"

#include <fstream>
#include <sstream>

#include "qforms/errors.hpp"

namespace qforms {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::kParse, what); }

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) schema(std::string("missing key '") + key + "'");
  return doc.at(key);
}

template <typename T>
T as(const Json& v, const char* what) {
  try {
    return v.get<T>();
  } catch (const nlohmann::json::exception&) {
    schema(std::string("bad value for '") + what + "': " + v.dump());
  }
}

BaseRing base_from_json(const Json& doc) {
  const int p = as<int>(field(doc, "p"), "p");
  if (doc.value("local", false)) return BaseRing::p_local(p);
  const int n = doc.contains("n") ? as<int>(doc.at("n"), "n") : 1;
  return BaseRing::finite_field(make_field(p, n));
}

Json base_to_json(const BaseRing& base) {
  Json out;
  out["p"] = base.prime();
  if (base.is_field()) {
    out["n"] = base.field().degree();
  } else {
    out["local"] = true;
  }
  return out;
}

RingPtr ring_from_json(const Json& doc, const BaseRing& base) {
  RingDescription d;
  d.base = base;
  if (doc.contains("generators")) {
    for (const Json& g : doc.at("generators")) {
      d.generators.push_back({as<std::string>(field(g, "name"), "name"), as<int>(field(g, "degree"), "degree"),
                              g.value("invertible", false)});
    }
  }
  d.infinite_tail = doc.value("infinite_tail", false);
  if (doc.contains("truncation")) {
    const Json& t = doc.at("truncation");
    d.truncation = Truncation{as<int>(field(t, "max_index"), "max_index"), as<int>(field(t, "max_degree"), "max_degree")};
  }
  return make_graded_ring(d);
}

Json ring_to_json(const GradedRing& ring) {
  Json out;
  out["generators"] = Json::array();
  for (const GeneratorSpec& g : ring.generators()) {
    Json j{{"name", g.name}, {"degree", g.degree}};
    if (g.invertible) j["invertible"] = true;
    out["generators"].push_back(j);
  }
  if (ring.infinite_tail()) out["infinite_tail"] = true;
  if (ring.truncation()) {
    out["truncation"] = {{"max_index", ring.truncation()->max_index}, {"max_degree", ring.truncation()->max_degree}};
  }
  return out;
}

MultiIndex index_from_json(const Json& v) {
  if (!v.is_array()) schema("multi-index must be an array: " + v.dump());
  std::vector<int> idx;
  for (const Json& i : v) idx.push_back(as<int>(i, "multi-index"));
  try {
    return MultiIndex::from_list(idx);
  } catch (const Error& e) {
    schema(e.what());
  }
}

Json index_to_json(MultiIndex m) {
  Json out = Json::array();
  for (int i : m.indices()) out.push_back(i);
  return out;
}

RingElement element_from_json(const Json& v, const RingPtr& ring) {
  return RingElement::parse(ring, as<std::string>(v, "element"));
}

Json family_to_json(const WitnessFamily& f) {
  Json out{{"description", f.description}, {"sample", f.sample}, {"members", Json::array()}};
  for (const BilinearForm& b : f.members) out["members"].push_back(form_to_json(b));
  return out;
}

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

}  // namespace

PresentationDocument presentation_from_json(const Json& doc) {
  try {
    const BaseRing base = base_from_json(field(doc, "base_field"));
    RingPtr coefficients = ring_from_json(field(doc, "coefficient_ring"), base);
    RingPtr ambient = doc.contains("ambient_ring") ? ring_from_json(doc.at("ambient_ring"), base) : nullptr;
    std::vector<SequenceGenerator> seq;
    const Json& s = field(doc, "regular_sequence");
    if (!s.is_array()) schema("regular_sequence must be an array");
    for (const Json& g : s) seq.push_back({as<std::string>(field(g, "name"), "name"), as<int>(field(g, "degree"), "degree")});
    PresentationDocument out;
    out.presentation = make_quotient(doc.value("name", std::string("F")), ambient, seq, coefficients,
                                     doc.value("sequence_infinite_tail", false));
    BilinearForm b(out.presentation->module());
    std::string base_name = "mu";
    std::string provenance;
    if (doc.contains("base_product")) {
      const Json& bp = doc.at("base_product");
      base_name = bp.value("name", base_name);
      provenance = bp.value("provenance", std::string());
      if (bp.contains("b_base")) b = form_from_json(bp.at("b_base"), out.presentation->module());
    }
    if (!classify_form(b).symmetric) schema("b_base must be symmetric");
    out.base = make_base(base_name, b, provenance);
    out.window_only = doc.value("window_only", false);
    return out;
  } catch (const nlohmann::json::exception& e) {
    schema(e.what());
  }
}

Json presentation_to_json(const PresentationDocument& doc) {
  const QuotientPresentation& f = *doc.presentation;
  Json out;
  out["name"] = f.name();
  out["base_field"] = base_to_json(f.coefficients()->base());
  if (f.ambient()) out["ambient_ring"] = ring_to_json(*f.ambient());
  out["coefficient_ring"] = ring_to_json(*f.coefficients());
  out["regular_sequence"] = Json::array();
  for (const SequenceGenerator& g : f.sequence()) out["regular_sequence"].push_back({{"name", g.name}, {"degree", g.degree}});
  if (f.infinite_tail()) out["sequence_infinite_tail"] = true;
  out["base_product"] = {{"name", doc.base->name}, {"b_base", form_to_json(doc.base->b_base)}};
  if (!doc.base->provenance.empty()) out["base_product"]["provenance"] = doc.base->provenance;
  if (doc.window_only) out["window_only"] = true;
  return out;
}

PresentationDocument document_from_catalog(const CatalogEntry& entry) {
  return PresentationDocument{entry.presentation, entry.base, entry.window_only_census};
}

Json form_to_json(const BilinearForm& beta) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < beta.size(); ++i)
    for (std::size_t j = 0; j < beta.size(); ++j)
      if (!beta(i, j).is_zero()) entries.push_back(Json::array({i, j, beta(i, j).to_string()}));
  return Json{{"entries", entries}};
}

BilinearForm form_from_json(const Json& doc, const ModulePtr& module) {
  const Json& entries = field(doc, "entries");
  if (!entries.is_array()) schema("entries must be an array");
  BilinearForm out(module);
  for (const Json& e : entries) {
    if (!e.is_array() || e.size() != 3) schema("form entry must be [i, j, element]: " + e.dump());
    const int i = as<int>(e[0], "i");
    const int j = as<int>(e[1], "j");
    if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= module->size() || static_cast<std::size_t>(j) >= module->size()) {
      schema("form entry index out of range: " + e.dump());
    }
    out.set(i, j, out(i, j) + element_from_json(e[2], module->coefficients));
  }
  return out;
}

Json tensor_to_json(const ProductTensor& t) {
  Json terms = Json::array();
  for (const auto& [ij, w] : t.terms()) {
    terms.push_back({{"I", index_to_json(ij.first)}, {"J", index_to_json(ij.second)}, {"w", w.to_string()}});
  }
  return Json{{"base", t.base()->name}, {"terms", terms}};
}

ProductTensor tensor_from_json(const Json& doc, const PresentationPtr& owner, const BasePtr& base) {
  if (doc.contains("base") && as<std::string>(doc.at("base"), "base") != base->name) {
    schema("tensor is written against '" + doc.at("base").get<std::string>() + "', expected '" + base->name + "'");
  }
  ProductTensor::TermMap terms;
  const Json& list = field(doc, "terms");
  if (!list.is_array()) schema("terms must be an array");
  for (const Json& term : list) {
    const IndexPair key{index_from_json(field(term, "I")), index_from_json(field(term, "J"))};
    const RingElement w = element_from_json(field(term, "w"), owner->coefficients());
    RingElement sum = terms.count(key) ? terms.at(key) + w : w;
    if (sum.is_zero()) {
      terms.erase(key);
    } else {
      terms[key] = sum;
    }
  }
  for (const auto& [key, w] : terms) {
    for (int i : key.first.indices())
      if (static_cast<std::size_t>(i) >= owner->size()) schema("tensor index out of range");
    for (int i : key.second.indices())
      if (static_cast<std::size_t>(i) >= owner->size()) schema("tensor index out of range");
  }
  return ProductTensor::from_terms(owner, base, terms);
}

Json endo_to_json(const EndoElement& e) {
  Json terms = Json::array();
  for (const auto& [ij, c] : e.terms()) {
    terms.push_back({{"I", index_to_json(ij.first)}, {"J", index_to_json(ij.second)}, {"c", c.to_string()}});
  }
  return Json{{"terms", terms}};
}

EndoElement endo_from_json(const Json& doc, const RingPtr& ring) {
  EndoElement out(ring);
  for (const Json& term : field(doc, "terms")) {
    out.add(index_from_json(field(term, "I")), index_from_json(field(term, "J")), element_from_json(field(term, "c"), ring));
  }
  return out;
}

Json count_to_json(const Count& c) {
  Json out;
  out["infinite"] = c.is_infinite();
  out["symbolic"] = c.symbolic();
  if (c.is_infinite()) {
    out["witness"] = c.witness();
  } else {
    out["value"] = c.value().get_str();
    if (auto v = c.as_u64()) out["u64"] = *v;
  }
  return out;
}

Count count_from_json(const Json& doc) {
  if (as<bool>(field(doc, "infinite"), "infinite")) return Count::infinite(doc.value("witness", std::string()));
  const std::string symbolic = as<std::string>(field(doc, "symbolic"), "symbolic");
  const mpz_class value(as<std::string>(field(doc, "value"), "value"));
  const auto caret = symbolic.find('^');
  if (caret != std::string::npos) {
    const Count c = Count::power(std::stoull(symbolic.substr(0, caret)), std::stol(symbolic.substr(caret + 1)));
    if (c.value() != value) schema("count value does not match " + symbolic);
    return c;
  }
  return Count::finite(value);
}

Json census_to_json(const CensusReport& r) {
  Json out;
  out["instance"] = r.instance;
  out["counts"] = {{"bil", count_to_json(r.bil)},
                   {"alt", count_to_json(r.alt)},
                   {"asym", count_to_json(r.asym)},
                   {"products", count_to_json(r.products)},
                   {"classes", count_to_json(r.classes)},
                   {"commutative", count_to_json(r.commutative)},
                   {"commutative_classes", count_to_json(r.commutative_classes)}};
  out["flags"] = {{"has_commutative", optional_bool(r.has_commutative)},
                  {"two_invertible", r.two_invertible},
                  {"two_torsion_free", r.two_torsion_free},
                  {"window_only", r.window_only}};
  out["cross_checked"] = optional_bool(r.cross_checked);
  out["commutative_witness"] = r.commutative_witness ? form_to_json(*r.commutative_witness) : Json(nullptr);
  out["family"] = r.family ? family_to_json(*r.family) : Json(nullptr);
  out["notes"] = r.notes;
  out["formula_reading"] = kFormulaReading;
  return out;
}

CensusReport census_from_json(const Json& doc, const ModulePtr& module) {
  try {
    CensusReport r;
    r.instance = as<std::string>(field(doc, "instance"), "instance");
    const Json& c = field(doc, "counts");
    r.bil = count_from_json(field(c, "bil"));
    r.alt = count_from_json(field(c, "alt"));
    r.asym = count_from_json(field(c, "asym"));
    r.products = count_from_json(field(c, "products"));
    r.classes = count_from_json(field(c, "classes"));
    r.commutative = count_from_json(field(c, "commutative"));
    r.commutative_classes = count_from_json(field(c, "commutative_classes"));
    const Json& f = field(doc, "flags");
    if (!f.at("has_commutative").is_null()) r.has_commutative = f.at("has_commutative").get<bool>();
    r.two_invertible = f.at("two_invertible").get<bool>();
    r.two_torsion_free = f.at("two_torsion_free").get<bool>();
    r.window_only = f.at("window_only").get<bool>();
    if (!doc.at("cross_checked").is_null()) r.cross_checked = doc.at("cross_checked").get<bool>();
    if (!doc.at("commutative_witness").is_null()) r.commutative_witness = form_from_json(doc.at("commutative_witness"), module);
    if (!doc.at("family").is_null()) {
      const Json& fam = doc.at("family");
      WitnessFamily w;
      w.description = fam.at("description").get<std::string>();
      w.sample = fam.at("sample").get<std::vector<std::string>>();
      for (const Json& m : fam.at("members")) w.members.push_back(form_from_json(m, module));
      r.family = w;
    }
    r.notes = doc.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    schema(e.what());
  }
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const RingElement& x : row) r.push_back(x.to_string());
    out.push_back(r);
  }
  return out;
}

Json load_json(const std::string& file_or_text) {
  try {
    if (!file_or_text.empty() && file_or_text.front() == '{') return Json::parse(file_or_text);
    std::ifstream in(file_or_text);
    if (!in) schema("cannot read '" + file_or_text + "'");
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    schema(e.what());
  }
}

}  // namespace qforms
