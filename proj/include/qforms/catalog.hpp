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

#ifndef QFORMS_CATALOG_HPP
#define QFORMS_CATALOG_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qforms/classification.hpp"

namespace qforms {

struct CatalogParams {
  int p = 2;
  int n = 1;
  // Number of sequence generators in the window (P(n), BP, HFp).
  std::optional<int> window;
};

struct CatalogEntry {
  std::string name;   // "K(n)", "K_n", "P(n)", "BP", "MU/J2@p=2", "HFp"
  std::string alias;  // kn, k2per, pn, bp, muj2, hfp
  CatalogParams params;
  PresentationPtr presentation;
  BasePtr base;
  bool diagonal_base = false;
  bool window_only_census = false;
  std::optional<WitnessFamily> family;
  std::vector<std::string> notes;

  ProductTensor base_tensor() const { return ProductTensor(presentation, base); }
  CensusReport run_census(std::uint64_t cross_check_bound = 10000) const;
};

std::vector<std::string> catalog_names();
// Accepts canonical names and aliases; throws kUnsupportedParams.
CatalogEntry get(std::string_view name, const CatalogParams& params = {});

// Indices i >= 1 of the generators x_i of MU_* (|x_i| = 2i) that are not of
// the form p^k - 1, in increasing order.
std::vector<int> admissible_indices(int p, int count);
bool is_admissible_index(int p, int i);

// The quotient map BP -> P(n) on a common window of `window` generators
// x_i, with BP commutative and P(n) carrying its standard product.
MapData bp_to_pn(int p, int n, int window = 3);
MapData bp_to_pn(int p, int n, const std::vector<int>& xs);
// The first admissible index followed by the indices e(p^n - 1) - 1 of the
// twist family, `size` in total.
std::vector<int> twist_window(int p, int n, int size = 3);
// gamma_e = v_n^e vbar_0^v (x) xbar_i^v with i = e(p^n - 1) - 1: twists with
// pi^*(gamma) = 0 and pairwise distinct quadratic forms.
WitnessFamily pn_twist_family(const PresentationPtr& target, int p, int n);

enum class ReproTarget {
  kBrownPeterson,
  kTruncatedBrownPeterson,
  kQuotientMaps,
  kNonDiagonalizable,
  kMoravaK,
  kPeriodicMoravaK,
  kPeriodicDiagonalizable,
  kEilenbergMacLane,
};

struct ReproCheck {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct ReproReport {
  std::string title;
  std::vector<ReproCheck> checks;
  bool pass() const;
};

std::vector<ReproTarget> repro_targets();
const char* repro_target_name(ReproTarget t);
ReproReport reproduce(ReproTarget target);

}  // namespace qforms

#endif  // QFORMS_CATALOG_HPP
