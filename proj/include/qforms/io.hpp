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

#ifndef QFORMS_IO_HPP
#define QFORMS_IO_HPP

#include <string>

#include "json.hpp"
#include "qforms/catalog.hpp"
#include "qforms/classification.hpp"

namespace qforms {

using Json = nlohmann::ordered_json;

// Presentation document:
//   {"name", "base_field": {"p", "n"} | {"p", "local": true},
//    "ambient_ring"?: RING, "coefficient_ring": RING,
//    "regular_sequence": [{"name", "degree"}], "sequence_infinite_tail"?,
//    "base_product": {"name", "b_base": FORM, "provenance"?}, "window_only"?}
// RING = {"generators": [{"name", "degree", "invertible"?}],
//         "infinite_tail"?, "truncation"?: {"max_index", "max_degree"}}
// FORM = {"entries": [[i, j, "element"], ...]} with 0-based indices.
struct PresentationDocument {
  PresentationPtr presentation;
  BasePtr base;
  bool window_only = false;

  ProductTensor base_tensor() const { return ProductTensor(presentation, base); }
};

// All parse failures raise Error(kParse).
PresentationDocument presentation_from_json(const Json& doc);
Json presentation_to_json(const PresentationDocument& doc);
PresentationDocument document_from_catalog(const CatalogEntry& entry);

Json form_to_json(const BilinearForm& beta);
BilinearForm form_from_json(const Json& doc, const ModulePtr& module);

// {"base": name, "terms": [{"I": [..], "J": [..], "w": "element"}]}
Json tensor_to_json(const ProductTensor& t);
ProductTensor tensor_from_json(const Json& doc, const PresentationPtr& owner, const BasePtr& base);

// {"terms": [{"I": [..], "J": [..], "c": "element"}]}
Json endo_to_json(const EndoElement& e);
EndoElement endo_from_json(const Json& doc, const RingPtr& ring);

// {"symbolic", "value"?, "u64"?, "infinite", "witness"?}
Json count_to_json(const Count& c);
Count count_from_json(const Json& doc);

Json census_to_json(const CensusReport& r);
CensusReport census_from_json(const Json& doc, const ModulePtr& module);

Json matrix_to_json(const Matrix& m);

// Reads a file, or parses `text` directly when it starts with '{'.
Json load_json(const std::string& file_or_text);

}  // namespace qforms

#endif  // QFORMS_IO_HPP
