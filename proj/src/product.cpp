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

#include "qforms/product.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "qforms/errors.hpp"

namespace qforms {

// ---------------------------------------------------------------- MultiIndex

MultiIndex MultiIndex::single(int i) {
  if (i < 0 || i > kMaxIndex) throw Error(ErrorCode::kInvalidArgument, "index out of range");
  return MultiIndex(1u << i);
}

MultiIndex MultiIndex::from_list(const std::vector<int>& indices) {
  std::uint32_t mask = 0;
  int previous = -1;
  for (int i : indices) {
    if (i <= previous || i > kMaxIndex) {
      throw Error(ErrorCode::kInvalidArgument, "multi-index must be strictly increasing and below 32");
    }
    mask |= 1u << i;
    previous = i;
  }
  return MultiIndex(mask);
}

int MultiIndex::length() const { return std::popcount(mask_); }

std::vector<int> MultiIndex::indices() const {
  std::vector<int> out;
  for (int i = 0; i <= kMaxIndex; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string MultiIndex::to_string() const {
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (int i : indices()) {
    if (!first) out << ',';
    out << i;
    first = false;
  }
  out << ')';
  return out.str();
}

bool MultiIndex::operator<(const MultiIndex& o) const {
  if (length() != o.length()) return length() < o.length();
  return indices() < o.indices();
}

int wedge_sign(MultiIndex a, MultiIndex b) {
  if (a.mask() & b.mask()) return 0;
  int crossings = 0;
  for (int i : b.indices()) crossings += std::popcount(a.mask() >> (i + 1));
  return crossings % 2 ? -1 : 1;
}

namespace {

// d_I(a_S) = sign * a_{S \ I}, applying d_{i_k} first; 0 unless I is in S.
int derivative_sign(std::uint32_t i_mask, std::uint32_t& s) {
  if ((i_mask & s) != i_mask) return 0;
  int sign = 1;
  for (int i = MultiIndex::kMaxIndex; i >= 0; --i) {
    if (!((i_mask >> i) & 1u)) continue;
    if (std::popcount(s & ((1u << i) - 1u)) % 2) sign = -sign;
    s &= ~(1u << i);
  }
  return sign;
}

RingElement signed_value(const RingElement& x, int sign) { return sign < 0 ? -x : x; }

}  // namespace

BasePtr make_base(std::string name, BilinearForm b_base, std::string provenance) {
  return std::make_shared<BaseProduct>(BaseProduct{std::move(name), std::move(b_base), std::move(provenance)});
}

// ---------------------------------------------------------------- EndoElement

EndoElement::EndoElement(RingPtr ring) : ring_(std::move(ring)) {}

EndoElement EndoElement::one(RingPtr ring) {
  EndoElement e(ring);
  e.add(MultiIndex(), MultiIndex(), RingElement::one(ring));
  return e;
}

EndoElement EndoElement::term(RingPtr ring, MultiIndex i, MultiIndex j, RingElement c) {
  EndoElement e(std::move(ring));
  e.add(i, j, c);
  return e;
}

RingElement EndoElement::coefficient(MultiIndex i, MultiIndex j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? RingElement::zero(ring_) : it->second;
}

void EndoElement::add(MultiIndex i, MultiIndex j, const RingElement& c) {
  if (c.is_zero()) return;
  auto it = terms_.find({i, j});
  if (it == terms_.end()) {
    terms_.emplace(IndexPair{i, j}, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool EndoElement::single_sided() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.second.empty(); });
}

EndoElement EndoElement::operator+(const EndoElement& o) const {
  EndoElement out = *this;
  for (const auto& [k, c] : o.terms_) out.add(k.first, k.second, c);
  return out;
}

EndoElement EndoElement::operator-(const EndoElement& o) const {
  EndoElement out = *this;
  for (const auto& [k, c] : o.terms_) out.add(k.first, k.second, -c);
  return out;
}

EndoElement EndoElement::operator*(const EndoElement& o) const {
  EndoElement out(ring_);
  for (const auto& [a, c] : terms_) {
    for (const auto& [b, d] : o.terms_) {
      const int s1 = wedge_sign(a.first, b.first);
      const int s2 = wedge_sign(a.second, b.second);
      if (s1 == 0 || s2 == 0) continue;
      int sign = s1 * s2;
      if ((a.second.length() * b.first.length()) % 2) sign = -sign;
      out.add(MultiIndex(a.first.mask() | b.first.mask()), MultiIndex(a.second.mask() | b.second.mask()),
              signed_value(c * d, sign));
    }
  }
  return out;
}

bool EndoElement::operator==(const EndoElement& o) const { return terms_ == o.terms_; }

std::string EndoElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  const bool one_sided = single_sided();
  for (const auto& [k, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    const bool unit = k.first.empty() && k.second.empty();
    if (unit) {
      out << c.to_string();
      continue;
    }
    if (c != RingElement::one(ring_)) out << '(' << c.to_string() << ")*";
    if (one_sided) {
      out << 'Q' << k.first.to_string();
    } else {
      out << 'Q' << k.first.to_string() << "^Q" << k.second.to_string();
    }
  }
  return out.str();
}

// ---------------------------------------------------------------- ProductTensor

ProductTensor::ProductTensor(PresentationPtr owner, BasePtr base) : owner_(std::move(owner)), base_(std::move(base)) {
  if (!base_->b_base.module()->same_as(*owner_->module())) {
    throw Error(ErrorCode::kInvalidArgument, "base product lives on a different module");
  }
}

int ProductTensor::weight(MultiIndex i) const {
  int w = 0;
  for (int k : i.indices()) w += owner_->basis_degree(static_cast<std::size_t>(k));
  return w;
}

namespace {

ProductTensor build_tensor(PresentationPtr owner, BasePtr base, const ProductTensor::TermMap& terms,
                           bool check_degrees, ProductTensor::TermMap& slot) {
  ProductTensor t(owner, base);
  const std::uint32_t limit = owner->size() >= 32 ? ~0u : ((1u << owner->size()) - 1u);
  for (const auto& [k, w] : terms) {
    if (w.is_zero()) continue;
    if (k.first.empty() || k.second.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "unit law: terms need nonempty I and J, got " +
                                                   k.first.to_string() + k.second.to_string());
    }
    if ((k.first.mask() & ~limit) || (k.second.mask() & ~limit)) {
      throw Error(ErrorCode::kInvalidArgument, "multi-index beyond the presentation rank");
    }
    if (check_degrees) {
      const int want = t.weight(k.first) + t.weight(k.second);
      if (w.degree() != want) {
        throw Error(ErrorCode::kDegreeMismatch, "w" + k.first.to_string() + k.second.to_string() + " = " +
                                                    w.to_string() + " must have degree " + std::to_string(want));
      }
    }
    slot.emplace(k, w);
  }
  return t;
}

}  // namespace

ProductTensor ProductTensor::from_terms(PresentationPtr owner, BasePtr base, const TermMap& terms) {
  TermMap checked;
  ProductTensor t = build_tensor(owner, base, terms, true, checked);
  t.terms_ = std::move(checked);
  return t;
}

ProductTensor ProductTensor::unchecked(PresentationPtr owner, BasePtr base, const TermMap& terms) {
  TermMap checked;
  ProductTensor t = build_tensor(owner, base, terms, false, checked);
  t.terms_ = std::move(checked);
  return t;
}

EndoElement ProductTensor::as_endo() const {
  EndoElement e = EndoElement::one(coefficients());
  for (const auto& [k, w] : terms_) e.add(k.first, k.second, w);
  return e;
}

ProductTensor ProductTensor::from_endo(PresentationPtr owner, BasePtr base, const EndoElement& e,
                                       bool check_degrees) {
  TermMap terms;
  bool unit = false;
  for (const auto& [k, c] : e.terms()) {
    if (k.first.empty() && k.second.empty()) {
      unit = (c == RingElement::one(e.ring()));
      if (!unit) break;
      continue;
    }
    terms.emplace(k, c);
  }
  if (!unit) throw Error(ErrorCode::kInvalidArgument, "operator does not have constant term 1");
  return check_degrees ? from_terms(std::move(owner), std::move(base), terms)
                       : unchecked(std::move(owner), std::move(base), terms);
}

bool ProductTensor::operator<(const ProductTensor& o) const {
  return std::lexicographical_compare(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end());
}

std::string ProductTensor::to_string() const {
  std::ostringstream out;
  out << base_->name << " o (1";
  for (const auto& [k, w] : terms_) {
    out << " + ";
    if (w != RingElement::one(coefficients())) out << '(' << w.to_string() << ")*";
    out << 'Q' << k.first.to_string() << "^Q" << k.second.to_string();
  }
  out << ')';
  return out.str();
}

// ---------------------------------------------------------------- action

EndoElement action_factor(const BilinearForm& beta,
                          const std::vector<std::pair<std::size_t, std::size_t>>& order) {
  const RingPtr& r = beta.coefficients();
  EndoElement e = EndoElement::one(r);
  for (const auto& [i, j] : order) {
    const RingElement& v = beta(i, j);
    if (v.is_zero()) continue;
    EndoElement factor = EndoElement::one(r);
    factor.add(MultiIndex::single(static_cast<int>(i)), MultiIndex::single(static_cast<int>(j)), v);
    e = e * factor;
  }
  return e;
}

EndoElement action_factor(const BilinearForm& beta) {
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t i = 0; i < beta.size(); ++i)
    for (std::size_t j = 0; j < beta.size(); ++j) order.emplace_back(i, j);
  return action_factor(beta, order);
}

ProductTensor expand_action(const BilinearForm& beta, const PresentationPtr& owner, const BasePtr& base) {
  return ProductTensor::from_endo(owner, base, action_factor(beta));
}

ProductTensor act(const BilinearForm& beta, const ProductTensor& t) {
  return ProductTensor::from_endo(t.owner(), t.base(), t.as_endo() * action_factor(beta));
}

Factorization try_factorize(const ProductTensor& t) {
  Factorization f;
  BilinearForm beta(t.owner()->module());
  for (const auto& [k, w] : t.terms()) {
    if (k.first.length() == 1 && k.second.length() == 1) {
      beta.set(static_cast<std::size_t>(k.first.indices()[0]), static_cast<std::size_t>(k.second.indices()[0]), w);
    }
  }
  const EndoElement rest = action_factor(-beta) * t.as_endo();
  std::optional<Obstruction> worst;
  for (const auto& [k, c] : rest.terms()) {
    if (k.first.empty() && k.second.empty()) continue;
    const int len = k.first.length() + k.second.length();
    if (!worst || len < worst->i.length() + worst->j.length()) worst = Obstruction{k.first, k.second, c};
  }
  if (worst) {
    f.obstruction = worst;
  } else {
    f.beta = beta;
  }
  return f;
}

BilinearForm factorize(const ProductTensor& t) {
  Factorization f = try_factorize(t);
  if (!f.ok()) {
    throw Error(ErrorCode::kNotAProduct, "NotAProduct(" + f.obstruction->i.to_string() + ", " +
                                             f.obstruction->j.to_string() + ", " +
                                             f.obstruction->value.to_string() + ")");
  }
  return *f.beta;
}

IdentityCheck check_product_identity(int n, const std::function<long(int)>& coefficient) {
  if (n < 1 || n > 8) throw Error(ErrorCode::kInvalidArgument, "product identity is checked for 1 <= n <= 8");
  std::map<std::uint32_t, long> product = {{0u, 1}};
  const std::uint32_t full = (1u << n) - 1u;
  for (int k = 1; k <= n; ++k) {
    const long c = coefficient(k);
    for (std::uint32_t s = 1; s <= full; ++s) {
      if (std::popcount(s) != k) continue;
      std::map<std::uint32_t, long> next = product;
      for (const auto& [mono, v] : product) {
        if (mono & s) continue;
        next[mono | s] += c * v;
      }
      product.clear();
      for (const auto& [mono, v] : next)
        if (v != 0) product.emplace(mono, v);
    }
  }
  std::map<std::uint32_t, long> residual = product;
  residual[0] -= 1;
  for (int k = 0; k < n; ++k) residual[1u << k] -= 1;
  IdentityCheck out;
  std::ostringstream text;
  bool first = true;
  for (const auto& [mono, v] : residual) {
    if (v == 0) continue;
    text << (v < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (std::abs(v) != 1) text << std::abs(v) << '*';
    bool first_symbol = true;
    for (int k = 0; k < n; ++k) {
      if (!((mono >> k) & 1u)) continue;
      text << (first_symbol ? "" : "*") << 'a' << (k + 1);
      first_symbol = false;
    }
    first = false;
  }
  out.residual = text.str();
  out.holds = out.residual.empty();
  return out;
}

bool product_identity_alternating(int n) {
  return check_product_identity(n, [](int k) { return k % 2 ? 1L : -1L; }).holds;
}

bool product_identity_log(int n) {
  return check_product_identity(n, [](int k) {
           long f = 1;
           for (int i = 2; i < k; ++i) f *= i;
           return k % 2 ? f : -f;
         }).holds;
}

// ---------------------------------------------------------------- Lambda model

LambdaElement::LambdaElement(RingPtr ring) : ring_(std::move(ring)) {}

LambdaElement LambdaElement::basis(RingPtr ring, MultiIndex i, RingElement c) {
  LambdaElement e(std::move(ring));
  e.add(i, c);
  return e;
}

LambdaElement LambdaElement::basis(RingPtr ring, MultiIndex i) {
  RingElement one = RingElement::one(ring);
  return basis(std::move(ring), i, one);
}

RingElement LambdaElement::coefficient(MultiIndex i) const {
  auto it = terms_.find(i.mask());
  return it == terms_.end() ? RingElement::zero(ring_) : it->second;
}

void LambdaElement::add(MultiIndex i, const RingElement& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(i.mask());
  if (it == terms_.end()) {
    terms_.emplace(i.mask(), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LambdaElement LambdaElement::operator+(const LambdaElement& o) const {
  LambdaElement out = *this;
  for (const auto& [k, c] : o.terms_) out.add(MultiIndex(k), c);
  return out;
}

LambdaElement LambdaElement::operator-(const LambdaElement& o) const {
  LambdaElement out = *this;
  for (const auto& [k, c] : o.terms_) out.add(MultiIndex(k), -c);
  return out;
}

LambdaElement LambdaElement::wedge(const LambdaElement& o) const {
  LambdaElement out(ring_);
  for (const auto& [a, c] : terms_)
    for (const auto& [b, d] : o.terms_) {
      const int s = wedge_sign(MultiIndex(a), MultiIndex(b));
      if (s != 0) out.add(MultiIndex(a | b), signed_value(c * d, s));
    }
  return out;
}

std::string LambdaElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << '(' << c.to_string() << ')';
    if (k != 0) out << "*a" << MultiIndex(k).to_string();
  }
  return out.str();
}

LambdaElement derivative(MultiIndex i, const LambdaElement& a) {
  LambdaElement out(a.ring());
  for (const auto& [s, c] : a.terms()) {
    std::uint32_t rest = s;
    const int sign = derivative_sign(i.mask(), rest);
    if (sign != 0) out.add(MultiIndex(rest), signed_value(c, sign));
  }
  return out;
}

LambdaElement derivative(int i, const LambdaElement& a) { return derivative(MultiIndex::single(i), a); }

LambdaElement apply(const EndoElement& f, const LambdaElement& a) {
  if (!f.single_sided()) throw Error(ErrorCode::kInvalidArgument, "operator on F ^ F applied to F");
  LambdaElement out(a.ring());
  for (const auto& [k, c] : f.terms()) {
    const LambdaElement d = derivative(k.first, a);
    for (const auto& [s, x] : d.terms()) out.add(MultiIndex(s), c * x);
  }
  return out;
}

LambdaPair tensor(const LambdaElement& a, const LambdaElement& b) {
  LambdaPair out;
  for (const auto& [s, c] : a.terms())
    for (const auto& [t, d] : b.terms()) out.emplace(std::make_pair(s, t), c * d);
  return out;
}

LambdaPair apply_pair(const EndoElement& op, const LambdaPair& x, const RingPtr& ring) {
  LambdaPair out;
  for (const auto& [k, c] : op.terms()) {
    for (const auto& [ab, d] : x) {
      std::uint32_t a = ab.first;
      std::uint32_t b = ab.second;
      const int sa = derivative_sign(k.first.mask(), a);
      if (sa == 0) continue;
      const int sb = derivative_sign(k.second.mask(), b);
      if (sb == 0) continue;
      int sign = sa * sb;
      if ((k.second.length() * std::popcount(ab.first)) % 2) sign = -sign;
      auto [it, fresh] = out.emplace(std::make_pair(a, b), RingElement::zero(ring));
      it->second += signed_value(c * d, sign);
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

LambdaModel::LambdaModel(const ProductTensor& t)
    : ring_(t.coefficients()), m_(t.owner()->size()),
      combined_(action_factor(-t.base()->b_base) * t.as_endo()) {}

LambdaElement LambdaModel::multiply_pair(const LambdaPair& x) const {
  LambdaElement out(ring_);
  for (const auto& [ab, c] : apply_pair(combined_, x, ring_)) {
    const int s = wedge_sign(MultiIndex(ab.first), MultiIndex(ab.second));
    if (s != 0) out.add(MultiIndex(ab.first | ab.second), signed_value(c, s));
  }
  return out;
}

LambdaElement LambdaModel::multiply_basis(MultiIndex a, MultiIndex b) const {
  LambdaPair x;
  x.emplace(std::make_pair(a.mask(), b.mask()), RingElement::one(ring_));
  return multiply_pair(x);
}

LambdaElement LambdaModel::multiply(const LambdaElement& a, const LambdaElement& b) const {
  return multiply_pair(tensor(a, b));
}

LambdaElement lambda_multiply(const ProductTensor& t, const LambdaElement& a, const LambdaElement& b) {
  return LambdaModel(t).multiply(a, b);
}

int default_associativity_bound(const ProductTensor& t) { return std::max(3, 3 * static_cast<int>(t.owner()->size())); }

bool is_associative(const ProductTensor& t, std::optional<int> bound) {
  const int limit = bound.value_or(default_associativity_bound(t));
  const LambdaModel model(t);
  const std::uint32_t n = 1u << t.owner()->size();
  std::vector<std::vector<std::optional<LambdaElement>>> table(n, std::vector<std::optional<LambdaElement>>(n));
  auto basis_product = [&](std::uint32_t a, std::uint32_t b) -> const LambdaElement& {
    if (!table[a][b]) table[a][b] = model.multiply_basis(MultiIndex(a), MultiIndex(b));
    return *table[a][b];
  };
  auto times_basis_right = [&](const LambdaElement& x, std::uint32_t c) {
    LambdaElement out(model.ring());
    for (const auto& [s, k] : x.terms())
      for (const auto& [u, v] : basis_product(s, c).terms()) out.add(MultiIndex(u), k * v);
    return out;
  };
  auto times_basis_left = [&](std::uint32_t a, const LambdaElement& x) {
    LambdaElement out(model.ring());
    for (const auto& [s, k] : x.terms())
      for (const auto& [u, v] : basis_product(a, s).terms()) out.add(MultiIndex(u), k * v);
    return out;
  };
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c) {
        if (std::popcount(a) + std::popcount(b) + std::popcount(c) > limit) continue;
        const LambdaElement lhs = times_basis_right(basis_product(a, b), c);
        const LambdaElement rhs = times_basis_left(a, basis_product(b, c));
        if (lhs != rhs) return false;
      }
  return true;
}

BilinearForm characteristic_form(const ProductTensor& t) {
  const BilinearForm beta = factorize(t);
  return t.base()->b_base - (beta + transpose(beta));
}

BilinearForm model_characteristic_form(const ProductTensor& t) {
  const LambdaModel model(t);
  const std::size_t m = t.owner()->size();
  Matrix r(m, std::vector<RingElement>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      r[i][j] = model.multiply_basis(MultiIndex::single(static_cast<int>(i)), MultiIndex::single(static_cast<int>(j)))
                    .augmentation();
  BilinearForm b(t.owner()->module());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) b.set(i, j, r[i][j] + r[j][i] - t.base()->b_base(i, j));
  return b;
}

ProductTensor opposite(const ProductTensor& t) { return act(characteristic_form(t), t); }

namespace {

EndoElement theta_with_sign(const BilinearForm& beta, int sign) {
  if (!classify_form(beta).alternating) throw Error(ErrorCode::kNotAlternating, "theta needs an alternating form");
  const RingPtr& r = beta.coefficients();
  EndoElement f = EndoElement::one(r);
  for (std::size_t i = 0; i < beta.size(); ++i)
    for (std::size_t j = i + 1; j < beta.size(); ++j) {
      if (beta(i, j).is_zero()) continue;
      EndoElement factor = EndoElement::one(r);
      factor.add(MultiIndex((1u << i) | (1u << j)), MultiIndex(), sign < 0 ? -beta(i, j) : beta(i, j));
      f = f * factor;
    }
  return f;
}

}  // namespace

EndoElement theta(const BilinearForm& beta) { return theta_with_sign(beta, 1); }
EndoElement theta_inverse(const BilinearForm& beta) { return theta_with_sign(beta, -1); }

namespace {

EndoElement square_tensor(const EndoElement& f) {
  EndoElement out(f.ring());
  for (const auto& [a, c] : f.terms())
    for (const auto& [b, d] : f.terms()) out.add(a.first, b.first, c * d);
  return out;
}

}  // namespace

bool verify_mult_equiv(const EndoElement& f, const ProductTensor& t, const ProductTensor& t2) {
  if (!f.single_sided()) throw Error(ErrorCode::kInvalidArgument, "equivalence must be an operator on F");
  const LambdaModel m1(t);
  const LambdaModel m2(t2);
  const EndoElement ff = square_tensor(f);
  const RingPtr& ring = t.coefficients();
  const std::uint32_t n = 1u << t.owner()->size();
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      const LambdaElement lhs = apply(f, m1.multiply_basis(MultiIndex(a), MultiIndex(b)));
      LambdaPair x;
      x.emplace(std::make_pair(a, b), RingElement::one(ring));
      const LambdaElement rhs = m2.multiply_pair(apply_pair(ff, x, ring));
      if (lhs != rhs) return false;
    }
  return true;
}

WitnessSearch search_equivalence_witness(const ProductTensor& t, const ProductTensor& t2, std::uint64_t bound) {
  WitnessSearch result;
  const RingPtr& ring = t.coefficients();
  const std::uint32_t n = 1u << t.owner()->size();
  std::vector<std::vector<RingElement>> choices(n);
  mpz_class total = 1;
  for (std::uint32_t s = 0; s < n; ++s) {
    const Slice slice = homogeneous_slice(ring, t.weight(MultiIndex(s)));
    if (!slice.finite) {
      result.exhaustive = false;
      return result;
    }
    total *= slice.cardinality().value();
    if (total > bound) {
      result.exhaustive = false;
      return result;
    }
    choices[s] = slice.elements();
  }
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    if (choices[0][idx[0]].is_unit()) {
      EndoElement f(ring);
      for (std::uint32_t s = 0; s < n; ++s) f.add(MultiIndex(s), MultiIndex(), choices[s][idx[s]]);
      ++result.candidates;
      if (verify_mult_equiv(f, t, t2)) {
        result.witness = f;
        return result;
      }
    }
    std::size_t k = 0;
    while (k < n && ++idx[k] == choices[k].size()) idx[k++] = 0;
    if (k == n) break;
  }
  return result;
}

BilinearForm relative_transform(const RelativeRule& rule, const BilinearForm& b_in) {
  switch (rule.kind) {
    case RelativeRuleKind::kOpPair:
      return -b_in;
    case RelativeRuleKind::kTwistLeft: {
      if (!rule.form) throw Error(ErrorCode::kInvalidArgument, "twist-left needs beta");
      const BilinearForm moved = rule.k ? base_change(*rule.k, *rule.form) : *rule.form;
      if (!moved.module()->same_as(*b_in.module())) {
        throw Error(ErrorCode::kDegreeMismatch, "twist-left: k (x) beta does not live on the module of b");
      }
      return b_in - moved;
    }
    case RelativeRuleKind::kTwistRight: {
      if (!rule.form) throw Error(ErrorCode::kInvalidArgument, "twist-right needs gamma");
      const ModuleMap pi = rule.pi ? *rule.pi : identity_map(rule.form->module());
      const BilinearForm pulled = pull_back(transpose(*rule.form), pi);
      if (!pulled.module()->same_as(*b_in.module())) {
        throw Error(ErrorCode::kDegreeMismatch, "twist-right: pi^*(gamma^t) does not live on the module of b");
      }
      return b_in - pulled;
    }
  }
  return b_in;
}

}  // namespace qforms
