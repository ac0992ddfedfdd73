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

#ifndef QFORMS_PRODUCT_HPP
#define QFORMS_PRODUCT_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qforms/forms.hpp"

namespace qforms {

// Strictly increasing index list i_1 < ... < i_k (0-based), stored as a
// bit mask. Generators a_i and operators Q_i are odd, so reordering a
// product picks up the sign of the permutation.
class MultiIndex {
 public:
  static constexpr int kMaxIndex = 31;

  MultiIndex() = default;
  explicit MultiIndex(std::uint32_t mask) : mask_(mask) {}
  static MultiIndex single(int i);
  // Throws kInvalidArgument unless strictly increasing and in range.
  static MultiIndex from_list(const std::vector<int>& indices);

  std::uint32_t mask() const { return mask_; }
  int length() const;
  bool empty() const { return mask_ == 0; }
  bool contains(int i) const { return (mask_ >> i) & 1u; }
  std::vector<int> indices() const;
  std::string to_string() const;  // "(0,2)"; "()" when empty

  bool operator==(const MultiIndex& o) const { return mask_ == o.mask_; }
  bool operator!=(const MultiIndex& o) const { return mask_ != o.mask_; }
  // Shorter first, then lexicographic on the index lists.
  bool operator<(const MultiIndex& o) const;

 private:
  std::uint32_t mask_ = 0;
};

// Sign of a_A * a_B = sign * a_{A u B} for disjoint A, B (0 if they meet).
int wedge_sign(MultiIndex a, MultiIndex b);

// The base product a tensor is written against: its name and its
// characteristic bilinear form.
struct BaseProduct {
  std::string name;
  BilinearForm b_base;
  std::string provenance;
};
using BasePtr = std::shared_ptr<const BaseProduct>;

BasePtr make_base(std::string name, BilinearForm b_base, std::string provenance = {});

using IndexPair = std::pair<MultiIndex, MultiIndex>;

// Element sum c_IJ Q_I (x) Q_J of the operator algebra on F ^ F, with
// (Q_I (x) Q_J)(Q_K (x) Q_L) = (-1)^{|J||K|} Q_I Q_K (x) Q_J Q_L. With every
// J empty it is an element sum c_I Q_I of the operator algebra on F.
class EndoElement {
 public:
  using TermMap = std::map<IndexPair, RingElement>;

  explicit EndoElement(RingPtr ring);
  static EndoElement one(RingPtr ring);
  static EndoElement term(RingPtr ring, MultiIndex i, MultiIndex j, RingElement c);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  RingElement coefficient(MultiIndex i, MultiIndex j) const;
  void add(MultiIndex i, MultiIndex j, const RingElement& c);
  bool single_sided() const;  // every J empty

  EndoElement operator+(const EndoElement& o) const;
  EndoElement operator-(const EndoElement& o) const;
  EndoElement operator*(const EndoElement& o) const;  // composition: (*this) after o
  bool operator==(const EndoElement& o) const;
  bool operator!=(const EndoElement& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  RingPtr ring_;
  TermMap terms_;
};

// A product on F relative to a base product: base o (1 + sum w_IJ Q_I ^ Q_J)
// with I, J nonempty and |w_IJ| = |Q_I| + |Q_J|.
class ProductTensor {
 public:
  using TermMap = std::map<IndexPair, RingElement>;

  ProductTensor(PresentationPtr owner, BasePtr base);
  // Throws kInvalidArgument on unit-law violations, kDegreeMismatch on
  // degree violations.
  static ProductTensor from_terms(PresentationPtr owner, BasePtr base, const TermMap& terms);
  // Skips the degree check (unit law still enforced); for obstruction tests.
  static ProductTensor unchecked(PresentationPtr owner, BasePtr base, const TermMap& terms);

  const PresentationPtr& owner() const { return owner_; }
  const BasePtr& base() const { return base_; }
  const TermMap& terms() const { return terms_; }
  const RingPtr& coefficients() const { return owner_->coefficients(); }
  bool is_identity() const { return terms_.empty(); }
  int weight(MultiIndex i) const;  // sum of |xbar_k| over k in i

  EndoElement as_endo() const;
  static ProductTensor from_endo(PresentationPtr owner, BasePtr base, const EndoElement& e, bool check_degrees = true);

  bool operator==(const ProductTensor& o) const { return terms_ == o.terms_; }
  bool operator!=(const ProductTensor& o) const { return !(*this == o); }
  bool operator<(const ProductTensor& o) const;
  std::string to_string() const;

 private:
  PresentationPtr owner_;
  BasePtr base_;
  TermMap terms_;
};

// prod over (i, j) in lexicographic order of (1 + v_ij Q_i ^ Q_j).
EndoElement action_factor(const BilinearForm& beta);
EndoElement action_factor(const BilinearForm& beta, const std::vector<std::pair<std::size_t, std::size_t>>& order);
ProductTensor expand_action(const BilinearForm& beta, const PresentationPtr& owner, const BasePtr& base);
// act(beta, T) = T o prod(1 + v_ij Q_i ^ Q_j).
ProductTensor act(const BilinearForm& beta, const ProductTensor& t);

struct Obstruction {
  MultiIndex i;
  MultiIndex j;
  RingElement value;
};

struct Factorization {
  std::optional<BilinearForm> beta;
  std::optional<Obstruction> obstruction;
  bool ok() const { return beta.has_value(); }
};

Factorization try_factorize(const ProductTensor& t);
// Throws Error(kNotAProduct) naming the obstruction.
BilinearForm factorize(const ProductTensor& t);

struct IdentityCheck {
  bool holds = false;
  // Nonzero terms of product - (1 + sum alpha_k), e.g. "-a1*a2*a3".
  std::string residual;
};

// Expands prod_S (1 + c(|S|) alpha_S) over all nonempty S in {1..n} (by
// size, then lexicographically) for commuting square-zero symbols alpha_k
// and compares with 1 + sum alpha_k.
IdentityCheck check_product_identity(int n, const std::function<long(int)>& coefficient);
// c(k) = (-1)^{k-1}: holds for n <= 2 only.
bool product_identity_alternating(int n);
// c(k) = (-1)^{k-1} (k-1)!, the logarithmic coefficients: holds for all n.
bool product_identity_log(int n);

// ---------------------------------------------------------------- Lambda model

class LambdaElement {
 public:
  using TermMap = std::map<std::uint32_t, RingElement>;

  explicit LambdaElement(RingPtr ring);
  static LambdaElement basis(RingPtr ring, MultiIndex i, RingElement c);
  static LambdaElement basis(RingPtr ring, MultiIndex i);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  RingElement coefficient(MultiIndex i) const;
  RingElement augmentation() const { return coefficient(MultiIndex()); }
  void add(MultiIndex i, const RingElement& c);
  bool is_zero() const { return terms_.empty(); }

  LambdaElement operator+(const LambdaElement& o) const;
  LambdaElement operator-(const LambdaElement& o) const;
  LambdaElement wedge(const LambdaElement& o) const;
  bool operator==(const LambdaElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const LambdaElement& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  RingPtr ring_;
  TermMap terms_;
};

// Partial derivative d/da_i (left derivative).
LambdaElement derivative(int i, const LambdaElement& a);
// Q_I acting as d_{i_1} o ... o d_{i_k}.
LambdaElement derivative(MultiIndex i, const LambdaElement& a);
// Single-sided operator acting on the Lambda model.
LambdaElement apply(const EndoElement& f, const LambdaElement& a);

// Elements of Lambda (x) Lambda.
using LambdaPair = std::map<std::pair<std::uint32_t, std::uint32_t>, RingElement>;
LambdaPair tensor(const LambdaElement& a, const LambdaElement& b);
// (d (x) d')(a (x) b) = (-1)^{|d'||a|} d(a) (x) d'(b).
LambdaPair apply_pair(const EndoElement& op, const LambdaPair& x, const RingPtr& ring);

// Multiplication on Lambda(a_1..a_m) induced by a product tensor: the base
// multiplication wedge o exp(-sum c_ij d_i (x) d_j) with c = b_base, after
// the operator 1 + sum w_IJ d_I (x) d_J.
class LambdaModel {
 public:
  explicit LambdaModel(const ProductTensor& t);

  std::size_t rank() const { return m_; }
  const RingPtr& ring() const { return ring_; }
  LambdaElement multiply(const LambdaElement& a, const LambdaElement& b) const;
  LambdaElement multiply_basis(MultiIndex a, MultiIndex b) const;
  // m_T on an element of Lambda (x) Lambda.
  LambdaElement multiply_pair(const LambdaPair& x) const;

 private:
  RingPtr ring_;
  std::size_t m_;
  EndoElement combined_;  // clifford o (1 + sum w_IJ Q_I (x) Q_J)
};

LambdaElement lambda_multiply(const ProductTensor& t, const LambdaElement& a, const LambdaElement& b);

// Checks m(m(a (x) b) (x) c) = m(a (x) m(b (x) c)) on basis triples with
// |A| + |B| + |C| <= bound. The default covers every basis triple; bounds
// of the form (longest term + 1) can miss failures, see the orbit oracle.
bool is_associative(const ProductTensor& t, std::optional<int> bound = std::nullopt);
int default_associativity_bound(const ProductTensor& t);

// b_base - (beta + beta^t) with beta = factorize(t).
BilinearForm characteristic_form(const ProductTensor& t);
// r + r^t - b_base with r_ij the augmentation of m(a_i (x) a_j).
BilinearForm model_characteristic_form(const ProductTensor& t);
ProductTensor opposite(const ProductTensor& t);

// prod_{i<j} (1 + v_ij Q_i Q_j); throws kNotAlternating.
EndoElement theta(const BilinearForm& beta);
EndoElement theta_inverse(const BilinearForm& beta);

// f o m_T = m_T2 o (f (x) f) on all basis pairs.
bool verify_mult_equiv(const EndoElement& f, const ProductTensor& t, const ProductTensor& t2);

struct WitnessSearch {
  std::optional<EndoElement> witness;
  std::uint64_t candidates = 0;
  bool exhaustive = true;
};

// Exhausts invertible f = sum c_I Q_I with c_I of degree |Q_I|.
WitnessSearch search_equivalence_witness(const ProductTensor& t, const ProductTensor& t2,
                                         std::uint64_t bound = 1000000);

enum class RelativeRuleKind { kTwistLeft, kTwistRight, kOpPair };

struct RelativeRule {
  RelativeRuleKind kind = RelativeRuleKind::kOpPair;
  std::optional<BilinearForm> form;  // beta (twist-left) or gamma (twist-right)
  std::optional<RingMap> k;          // coefficient map for twist-left
  std::optional<ModuleMap> pi;       // module map for twist-right
};

// twist-left: b - k (x) beta; twist-right: b - pi^*(gamma^t); op-pair: -b.
BilinearForm relative_transform(const RelativeRule& rule, const BilinearForm& b_in);

}  // namespace qforms

#endif  // QFORMS_PRODUCT_HPP
