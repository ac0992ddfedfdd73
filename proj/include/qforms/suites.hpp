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

#ifndef QFORMS_SUITES_HPP
#define QFORMS_SUITES_HPP

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qforms/catalog.hpp"

namespace qforms {

// F_p[u^+-1] with |u| = 2 and two generators x0, x1 of degree 0.
PresentationPtr toy_presentation(int p);

BilinearForm random_form(const ModulePtr& module, std::mt19937& rng);
BilinearForm random_alternating(const ModulePtr& module, std::mt19937& rng);

// Every unital tensor with degree-valid coefficients and |I|, |J| <= max_length.
std::vector<ProductTensor> unital_tensors(const PresentationPtr& owner, const BasePtr& base, int max_length);

// Exact symbolic checks: the product identity (alternating and logarithmic
// coefficients), anticommutation of the Q_i, the unit law, agreement of the
// Lambda-model form and symmetry of characteristic forms.
ReproReport suite_identities();
// Associative tensors against the orbit, and the char-2 image of the
// characteristic form, by exhaustive enumeration.
ReproReport suite_orbit_oracle();
// Random forms against the transformation rules.
ReproReport suite_transforms(int trials = 200, unsigned seed = 1);
// theta witnesses and the exhaustive no-witness search.
ReproReport suite_equivalence(int trials = 50, unsigned seed = 1);
// Every catalog reproduction.
ReproReport suite_catalog();

std::vector<std::string> suite_names();
// "transforms" runs the transformation and equivalence checks together.
ReproReport run_suite(std::string_view name);

}  // namespace qforms

#endif  // QFORMS_SUITES_HPP
