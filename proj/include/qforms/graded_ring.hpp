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

#ifndef QFORMS_GRADED_RING_HPP
#define QFORMS_GRADED_RING_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "qforms/scalar.hpp"

namespace qforms {

// Exact cardinality of a finite set, or an infinite marker with a witness.
// Counts that are powers q^e of a field size keep the symbolic form.
class Count {
 public:
  static Count finite(mpz_class value);
  static Count power(std::uint64_t base, long exponent);
  static Count infinite(std::string witness);

  bool is_infinite() const { return infinite_; }
  const mpz_class& value() const;
  std::optional<std::uint64_t> as_u64() const;
  const std::string& witness() const { return witness_; }
  // "9^4" for powers (when exponent > 1), decimal otherwise, "infinite".
  std::string symbolic() const;
  std::string to_string() const;  // "9^4 = 6561"

  std::optional<std::uint64_t> base() const { return base_; }
  long exponent() const { return exponent_; }

  Count operator*(const Count& other) const;
  // Exact quotient; throws if not divisible.
  Count operator/(const Count& other) const;
  bool operator==(const Count& other) const;

 private:
  bool infinite_ = false;
  mpz_class value_;
  std::optional<std::uint64_t> base_;
  long exponent_ = 1;
  std::string witness_;
};

struct GeneratorSpec {
  std::string name;
  int degree = 0;
  bool invertible = false;
};

struct Truncation {
  int max_index = 0;   // number of generators kept in the window
  int max_degree = 0;  // window is complete through this degree
};

struct RingDescription {
  BaseRing base = BaseRing::p_local(2);
  std::vector<GeneratorSpec> generators;
  // More generators exist beyond the listed ones (e.g. x_2, x_3, ...).
  bool infinite_tail = false;
  std::optional<Truncation> truncation;
};

using Exponents = std::vector<int>;

class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

// Graded commutative ring base[g_1, ..., g_k] with at most one Laurent
// generator. Immutable after construction.
class GradedRing : public std::enable_shared_from_this<GradedRing> {
 public:
  const BaseRing& base() const { return base_; }
  const std::vector<GeneratorSpec>& generators() const { return generators_; }
  std::size_t num_generators() const { return generators_.size(); }
  bool infinite_tail() const { return infinite_tail_; }
  const std::optional<Truncation>& truncation() const { return truncation_; }
  std::optional<std::size_t> invertible_index() const { return invertible_; }
  std::optional<std::size_t> generator_index(std::string_view name) const;
  int degree_of(const Exponents& e) const;
  // Every nonzero homogeneous element is a unit (a field, or a field with a
  // single Laurent generator and nothing else).
  bool is_graded_field() const;
  const std::string& description() const { return description_; }

  friend RingPtr make_graded_ring(const RingDescription& desc);

 private:
  GradedRing() = default;

  BaseRing base_ = BaseRing::p_local(2);
  std::vector<GeneratorSpec> generators_;
  bool infinite_tail_ = false;
  std::optional<Truncation> truncation_;
  std::optional<std::size_t> invertible_;
  std::string description_;
};

RingPtr make_graded_ring(const RingDescription& desc);

struct GradedLexLess {
  const GradedRing* ring = nullptr;
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse element of a GradedRing: exponent vector -> nonzero coefficient,
// ordered graded-lexicographically, so equality is structural.
class RingElement {
 public:
  using TermMap = std::map<Exponents, Scalar, GradedLexLess>;

  RingElement() = default;  // detached zero; adopts the ring of the other operand
  explicit RingElement(RingPtr ring);

  static RingElement zero(RingPtr ring) { return RingElement(std::move(ring)); }
  static RingElement one(RingPtr ring);
  static RingElement constant(RingPtr ring, const Scalar& c);
  static RingElement from_int(RingPtr ring, long c);
  static RingElement generator(RingPtr ring, std::size_t index);
  static RingElement generator(RingPtr ring, std::string_view name);
  static RingElement monomial(RingPtr ring, Exponents exponents, const Scalar& c);
  // Grammar: terms `c*name^k*name...` joined by `+`/`-`; c is an integer,
  // a fraction a/b (Z_(p)), or {c0,c1,...} for F_{p^n}; `0` is zero.
  static RingElement parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  // Degree of a nonzero homogeneous element.
  std::optional<int> degree() const;
  bool is_unit() const;
  RingElement inverse() const;  // units only
  // Coefficient of a monomial (zero if absent).
  Scalar coefficient(const Exponents& e) const;
  // Only for elements of the base ring (single constant term or zero).
  std::optional<Scalar> as_constant() const;

  RingElement operator+(const RingElement& other) const;
  RingElement operator-(const RingElement& other) const;
  RingElement operator-() const;
  RingElement operator*(const RingElement& other) const;
  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  RingElement scaled(const Scalar& c) const;
  RingElement pow(long e) const;

  bool operator==(const RingElement& other) const;
  bool operator!=(const RingElement& other) const { return !(*this == other); }
  bool operator<(const RingElement& other) const;  // total order for sets

  std::string to_string() const;

 private:
  RingPtr resolved(const RingElement& other) const;
  void add_term(const Exponents& e, const Scalar& c);

  RingPtr ring_;
  TermMap terms_;
};

// Homogeneous slice R_d: either finite (spanned over a finite base ring by
// `monomials`) or infinite with a witness description. Over Z_(p) an
// infinite slice still lists its spanning monomials.
struct Slice {
  int degree = 0;
  bool finite = true;
  std::string witness;
  std::vector<Exponents> monomials;
  RingPtr ring;

  Count cardinality() const;
  // Enumerates every element (including zero); finite slices only.
  std::vector<RingElement> elements() const;
  void for_each(const std::function<void(const RingElement&)>& visit) const;
  bool contains(const RingElement& x) const;
};

Slice homogeneous_slice(const RingPtr& ring, int degree);

// Ring homomorphism source -> target given on generators; scalars are mapped
// by BaseRing::map_to (identity, Z_(p) -> F_p, prime field -> extension).
class RingMap {
 public:
  RingMap(RingPtr source, RingPtr target, std::vector<RingElement> images);
  // Sends generators with the same name to each other and all others to 0
  // (invertible generators without a match go to 1).
  static RingMap by_names(RingPtr source, RingPtr target);

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  RingElement apply(const RingElement& x) const;

 private:
  RingPtr source_;
  RingPtr target_;
  std::vector<RingElement> images_;
};

// Reduction to the residue field: Laurent generator -> 1, others -> 0,
// Z_(p) -> F_p. Used for residue-field rank checks.
RingPtr residue_field_ring(const RingPtr& ring);
RingMap residue_map(const RingPtr& ring);

}  // namespace qforms

#endif  // QFORMS_GRADED_RING_HPP
