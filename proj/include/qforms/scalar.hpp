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

#ifndef QFORMS_SCALAR_HPP
#define QFORMS_SCALAR_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace qforms {

bool is_prime(long n);

// Finite field F_{p^n}. An element is encoded by the integer sum c_k p^k of
// its coefficients in the power basis 1, t, ..., t^{n-1}; the code of a prime
// subfield element is its residue. Handles are cheap to copy and share one
// immutable table set.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  int characteristic() const { return impl_->p; }
  int degree() const { return impl_->n; }
  Elem order() const { return impl_->q; }
  // Coefficients a_0, ..., a_n of the monic modulus (a_n = 1).
  const std::vector<int>& modulus() const { return impl_->modulus; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long value) const;
  Elem generator() const;  // the class of t (equals from_int(0) only if n==1)

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // throws on zero
  Elem pow(Elem a, long e) const;

  std::vector<int> digits(Elem a) const;
  Elem from_digits(const std::vector<int>& digits) const;

  bool operator==(const FiniteField& other) const {
    return impl_->p == other.impl_->p && impl_->n == other.impl_->n &&
           impl_->modulus == other.impl_->modulus;
  }

  friend FiniteField make_field(int p, int n);

 private:
  struct Impl {
    int p = 0;
    int n = 0;
    Elem q = 0;
    std::vector<int> modulus;
    std::vector<Elem> exp_table;  // exp_table[k] = g^k, size q-1
    std::vector<int> log_table;   // log_table[a] for a != 0
  };
  explicit FiniteField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

// Returns F_{p^n} with the least monic irreducible modulus, ordered by the
// integer code of its lower coefficients. Requires p prime, 1 <= n <= 4.
FiniteField make_field(int p, int n);

// Exhaustive irreducibility test over F_p (trial division by every monic
// polynomial of degree <= deg/2). Coefficients are a_0..a_deg.
bool is_irreducible_mod_p(const std::vector<int>& coefficients, int p);

// A coefficient value: a finite field code or an element of Z_(p).
class Scalar {
 public:
  Scalar() : value_(FiniteField::Elem{0}) {}
  explicit Scalar(FiniteField::Elem code) : value_(code) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}

  bool is_field() const { return std::holds_alternative<FiniteField::Elem>(value_); }
  FiniteField::Elem code() const { return std::get<FiniteField::Elem>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  bool operator==(const Scalar& other) const;
  bool operator<(const Scalar& other) const;

 private:
  std::variant<FiniteField::Elem, mpq_class> value_;
};

// Coefficient ring of a graded ring: a finite field or the p-local integers.
class BaseRing {
 public:
  enum class Kind { kFiniteField, kPLocal };

  static BaseRing finite_field(FiniteField field) { return BaseRing(std::move(field)); }
  static BaseRing p_local(int p);

  Kind kind() const { return kind_; }
  bool is_field() const { return kind_ == Kind::kFiniteField; }
  int prime() const { return p_; }
  // 0 for Z_(p), p otherwise.
  int characteristic() const { return is_field() ? p_ : 0; }
  const FiniteField& field() const;
  // Number of elements, or nullopt when infinite.
  std::optional<std::uint64_t> cardinality() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  bool is_zero(const Scalar& a) const;
  bool is_unit(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;  // throws kInvalidArgument if not a unit

  // All elements, in code order; only for finite fields.
  std::vector<Scalar> elements() const;

  // Reduction Z_(p) -> F_p, identity on fields.
  Scalar residue(const Scalar& a, const BaseRing& residue_ring) const;
  BaseRing residue_field() const;
  // Maps a into `target` when that is the same ring, its residue field, or
  // an extension of the prime field.
  Scalar map_to(const Scalar& a, const BaseRing& target) const;

  std::string to_string(const Scalar& a) const;
  Scalar parse(std::string_view text) const;
  std::string description() const;

  bool operator==(const BaseRing& other) const;

 private:
  explicit BaseRing(FiniteField field)
      : kind_(Kind::kFiniteField), p_(field.characteristic()), field_(std::move(field)) {}
  explicit BaseRing(int p) : kind_(Kind::kPLocal), p_(p) {}

  Kind kind_;
  int p_;
  std::optional<FiniteField> field_;
};

}  // namespace qforms

#endif  // QFORMS_SCALAR_HPP
