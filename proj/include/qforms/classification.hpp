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

#ifndef QFORMS_CLASSIFICATION_HPP
#define QFORMS_CLASSIFICATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qforms/forms.hpp"
#include "qforms/product.hpp"

namespace qforms {

// Parameterized family of pairwise non-equivalent forms, used to witness
// an infinite count. Members are the ones that fit in the current window.
struct WitnessFamily {
  std::string description;
  std::vector<std::string> sample;  // first few members, human readable
  std::vector<BilinearForm> members;
};

// Checks that the members are pairwise non-equivalent (differences are not
// alternating).
bool pairwise_non_equivalent(const std::vector<BilinearForm>& forms);

// Family c * m at a single entry (i, j) of an infinite slice, c = 1, 2, ...
std::optional<WitnessFamily> multiples_family(const QuotientPresentation& f);

struct ProductEnumeration {
  bool infinite = false;
  std::vector<ProductTensor> products;  // the full orbit when finite
  std::optional<WitnessFamily> family;
};

// The orbit {act(beta, base)} of a finite Bil^0, or the infinite marker.
// `family` overrides the generic witness family.
ProductEnumeration enumerate_products(const ProductTensor& base,
                                      const std::optional<WitnessFamily>& family = std::nullopt);

struct CommutativeAnalysis {
  // Empty only when undecidable by the available procedures.
  std::optional<bool> exists;
  std::optional<BilinearForm> witness;  // beta with act(beta, base) commutative
  std::string method;
};

// Solves beta + beta^t = b_base. Off-diagonal entries always split; the
// diagonal needs 2 beta_ii = b_ii, decided coefficientwise.
CommutativeAnalysis commutative_analysis(const QuotientPresentation& f, const BilinearForm& b_base);

struct CensusOptions {
  std::uint64_t cross_check_bound = 10000;
  // Report counts of the window even when the sequence has an infinite tail.
  bool window_only = false;
};

struct CensusReport {
  std::string instance;
  Count bil = Count::finite(0);
  Count alt = Count::finite(0);
  Count asym = Count::finite(0);
  Count products = Count::finite(0);
  Count classes = Count::finite(0);
  Count commutative = Count::finite(0);
  Count commutative_classes = Count::finite(0);
  std::optional<bool> has_commutative;
  std::optional<BilinearForm> commutative_witness;
  bool two_invertible = false;
  bool two_torsion_free = false;
  bool window_only = false;
  std::optional<bool> cross_checked;  // set when exhaustive enumeration ran
  std::optional<WitnessFamily> family;
  std::vector<std::string> notes;
};

extern const char* const kFormulaReading;

CensusReport census(const ProductTensor& base, const CensusOptions& options = {},
                    const std::optional<WitnessFamily>& family = std::nullopt);

// Exhaustive counts over a finite Bil^0, computed without the formulas.
struct EnumeratedCensus {
  std::uint64_t bil = 0;
  std::uint64_t alt = 0;
  std::uint64_t asym = 0;
  std::uint64_t products = 0;
  std::uint64_t classes = 0;
  std::uint64_t commutative = 0;
  std::uint64_t commutative_classes = 0;
};
EnumeratedCensus enumerate_census(const ProductTensor& base);

struct EquivalenceResult {
  bool equivalent = false;
  BilinearForm difference;  // beta with act(beta, t1) = t2
  std::optional<EndoElement> witness;
  bool witness_verified = false;
};

// Throws kDifferentBase unless both tensors share a base product.
EquivalenceResult equivalence(const ProductTensor& t1, const ProductTensor& t2);

enum class DiagVerdict { kDiagonalizable, kNotDiagonalizable, kUnknown };
const char* diag_verdict_name(DiagVerdict v);

struct DiagonalizabilityResult {
  DiagVerdict verdict = DiagVerdict::kUnknown;
  BilinearForm characteristic;
  std::optional<Matrix> change_of_basis;
  bool degree_obstruction = false;
  std::uint64_t candidates = 0;
  std::string reason;
};

DiagonalizabilityResult diagonalizability(const ProductTensor& t, std::uint64_t search_bound = 1000000);

// A quotient map F = R/I -> G = R/J: the induced map pi on V-modules (over
// G_*), the coefficient map k: F_* -> G_*, and the forms b_F, b_G, b_F^G.
struct MapData {
  PresentationPtr source;
  PresentationPtr target;
  ModuleMap pi;
  RingMap k;
  BilinearForm b_source;
  BilinearForm b_target;
  BilinearForm b_relative;  // on V_F with coefficients G_*
};

void check_map_data(const MapData& m);

struct SmoothnessResult {
  bool smooth = false;
  std::size_t rank = 0;
  std::string caveat;  // set when only the residue-field rank was checked
};

SmoothnessResult smoothness(const MapData& m);

struct MultiplicativityResult {
  SmoothnessResult smoothness;
  bool multiplicative = false;
  BilinearForm base_changed;  // G_* (x) b_F
  BilinearForm relative;      // b_F^G
  BilinearForm pulled_back;   // pi^*(b_G)
};

// Twists beta on F and gamma on G. Throws kNotSmooth when pi is not
// injective.
MultiplicativityResult map_multiplicativity(const MapData& m, const std::optional<BilinearForm>& beta = std::nullopt,
                                            const std::optional<BilinearForm>& gamma = std::nullopt);

}  // namespace qforms

#endif  // QFORMS_CLASSIFICATION_HPP
