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

#include "qforms/graded_ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <utility>

#include "qforms/errors.hpp"

namespace qforms {

// ---------------------------------------------------------------- Count

Count Count::finite(mpz_class value) {
  Count c;
  c.value_ = std::move(value);
  return c;
}

Count Count::power(std::uint64_t base, long exponent) {
  if (exponent < 0) throw Error(ErrorCode::kInvalidArgument, "negative exponent in count");
  Count c;
  mpz_ui_pow_ui(c.value_.get_mpz_t(), base, static_cast<unsigned long>(exponent));
  c.base_ = base;
  c.exponent_ = exponent;
  return c;
}

Count Count::infinite(std::string witness) {
  Count c;
  c.infinite_ = true;
  c.witness_ = std::move(witness);
  return c;
}

const mpz_class& Count::value() const {
  if (infinite_) throw Error(ErrorCode::kInvalidArgument, "infinite count has no value");
  return value_;
}

std::optional<std::uint64_t> Count::as_u64() const {
  if (infinite_ || !value_.fits_ulong_p()) return std::nullopt;
  return static_cast<std::uint64_t>(value_.get_ui());
}

std::string Count::symbolic() const {
  if (infinite_) return "infinite";
  if (base_ && exponent_ >= 2) return std::to_string(*base_) + "^" + std::to_string(exponent_);
  return value_.get_str();
}

std::string Count::to_string() const {
  if (infinite_) return witness_.empty() ? "infinite" : "infinite (" + witness_ + ")";
  const std::string s = symbolic();
  if (s == value_.get_str()) return s;
  return s + " = " + value_.get_str();
}

Count Count::operator*(const Count& other) const {
  if (infinite_) return *this;
  if (other.infinite_) return other;
  if (!base_ && value_ == 1) return other;
  if (!other.base_ && other.value_ == 1) return *this;
  if (base_ && other.base_ && *base_ == *other.base_) {
    return power(*base_, exponent_ + other.exponent_);
  }
  return finite(value_ * other.value_);
}

Count Count::operator/(const Count& other) const {
  if (infinite_ || other.infinite_) {
    throw Error(ErrorCode::kInvalidArgument, "division of infinite counts");
  }
  if (base_ && other.base_ && *base_ == *other.base_ && exponent_ >= other.exponent_) {
    return power(*base_, exponent_ - other.exponent_);
  }
  if (other.value_ == 0 || value_ % other.value_ != 0) {
    throw Error(ErrorCode::kInvalidArgument, "count " + value_.get_str() + " not divisible by " +
                                                 other.value_.get_str());
  }
  return finite(value_ / other.value_);
}

bool Count::operator==(const Count& other) const {
  if (infinite_ || other.infinite_) return infinite_ == other.infinite_;
  return value_ == other.value_;
}

// ---------------------------------------------------------------- GradedRing

RingPtr make_graded_ring(const RingDescription& desc) {
  std::shared_ptr<GradedRing> ring(new GradedRing());
  ring->base_ = desc.base;
  ring->infinite_tail_ = desc.infinite_tail;
  ring->truncation_ = desc.truncation;
  for (std::size_t k = 0; k < desc.generators.size(); ++k) {
    const GeneratorSpec& g = desc.generators[k];
    if (g.name.empty() || !(std::isalpha(static_cast<unsigned char>(g.name[0])) || g.name[0] == '_')) {
      throw Error(ErrorCode::kInvalidArgument, "bad generator name '" + g.name + "'");
    }
    if (g.degree % 2 != 0) {
      throw Error(ErrorCode::kOddDegreeGenerator,
                  g.name + " has odd degree " + std::to_string(g.degree));
    }
    if (!g.invertible && g.degree < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  g.name + " is not invertible but has negative degree");
    }
    if (g.invertible) {
      if (ring->invertible_) {
        throw Error(ErrorCode::kMultipleInvertibleGenerators,
                    "both " + desc.generators[*ring->invertible_].name + " and " + g.name);
      }
      ring->invertible_ = k;
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (desc.generators[j].name == g.name) {
        throw Error(ErrorCode::kInvalidArgument, "duplicate generator " + g.name);
      }
    }
  }
  if (desc.infinite_tail && !desc.truncation) {
    throw Error(ErrorCode::kEmptyTruncationForInfinitePresentation,
                "an infinite presentation needs a truncation (max index, max degree)");
  }
  if (desc.truncation && desc.truncation->max_index < static_cast<int>(desc.generators.size())) {
    ring->generators_.assign(desc.generators.begin(),
                             desc.generators.begin() + desc.truncation->max_index);
    if (ring->invertible_ && *ring->invertible_ >= ring->generators_.size()) ring->invertible_.reset();
  } else {
    ring->generators_ = desc.generators;
  }

  std::ostringstream d;
  d << desc.base.description();
  if (!ring->generators_.empty() || desc.infinite_tail) {
    d << '[';
    for (std::size_t k = 0; k < ring->generators_.size(); ++k) {
      const GeneratorSpec& g = ring->generators_[k];
      if (k) d << ", ";
      d << g.name << (g.invertible ? "^+-1" : "") << " (" << g.degree << ')';
    }
    if (desc.infinite_tail) d << ", ...";
    d << ']';
  }
  if (desc.truncation) d << " through degree " << desc.truncation->max_degree;
  ring->description_ = d.str();
  return ring;
}

std::optional<std::size_t> GradedRing::generator_index(std::string_view name) const {
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    if (generators_[k].name == name) return k;
  }
  return std::nullopt;
}

int GradedRing::degree_of(const Exponents& e) const {
  int d = 0;
  for (std::size_t k = 0; k < e.size(); ++k) d += e[k] * generators_[k].degree;
  return d;
}

bool GradedRing::is_graded_field() const {
  if (!base_.is_field() || infinite_tail_) return false;
  if (generators_.empty()) return true;
  return generators_.size() == 1 && generators_[0].invertible;
}

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  if (ring != nullptr) {
    const int da = ring->degree_of(a);
    const int db = ring->degree_of(b);
    if (da != db) return da < db;
  }
  return a < b;
}

// ---------------------------------------------------------------- RingElement

namespace {

bool compatible(const GradedRing& a, const GradedRing& b) {
  if (&a == &b) return true;
  if (!(a.base() == b.base()) || a.num_generators() != b.num_generators()) return false;
  for (std::size_t k = 0; k < a.num_generators(); ++k) {
    const GeneratorSpec& x = a.generators()[k];
    const GeneratorSpec& y = b.generators()[k];
    if (x.name != y.name || x.degree != y.degree || x.invertible != y.invertible) return false;
  }
  return true;
}

}  // namespace

RingElement::RingElement(RingPtr ring)
    : ring_(std::move(ring)), terms_(GradedLexLess{ring_.get()}) {}

RingElement RingElement::one(RingPtr ring) {
  RingElement x(ring);
  x.add_term(Exponents(ring->num_generators(), 0), ring->base().one());
  return x;
}

RingElement RingElement::constant(RingPtr ring, const Scalar& c) {
  RingElement x(ring);
  x.add_term(Exponents(ring->num_generators(), 0), c);
  return x;
}

RingElement RingElement::from_int(RingPtr ring, long c) {
  const Scalar s = ring->base().from_int(c);
  return constant(std::move(ring), s);
}

RingElement RingElement::generator(RingPtr ring, std::size_t index) {
  if (index >= ring->num_generators()) {
    throw Error(ErrorCode::kInvalidArgument, "generator index out of range");
  }
  Exponents e(ring->num_generators(), 0);
  e[index] = 1;
  const Scalar one = ring->base().one();
  return monomial(std::move(ring), std::move(e), one);
}

RingElement RingElement::generator(RingPtr ring, std::string_view name) {
  const auto index = ring->generator_index(name);
  if (!index) throw Error(ErrorCode::kParse, "unknown generator '" + std::string(name) + "'");
  return generator(std::move(ring), *index);
}

RingElement RingElement::monomial(RingPtr ring, Exponents exponents, const Scalar& c) {
  if (exponents.size() != ring->num_generators()) {
    throw Error(ErrorCode::kInvalidArgument, "exponent vector has wrong length");
  }
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    if (exponents[k] < 0 && !ring->generators()[k].invertible) {
      throw Error(ErrorCode::kInvalidArgument,
                  "negative exponent on non-invertible " + ring->generators()[k].name);
    }
  }
  RingElement x(ring);
  x.add_term(exponents, c);
  return x;
}

void RingElement::add_term(const Exponents& e, const Scalar& c) {
  const BaseRing& base = ring_->base();
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!base.is_zero(c)) terms_.emplace(e, c);
    return;
  }
  Scalar sum = base.add(it->second, c);
  if (base.is_zero(sum)) {
    terms_.erase(it);
  } else {
    it->second = std::move(sum);
  }
}

RingPtr RingElement::resolved(const RingElement& other) const {
  if (!ring_) return other.ring_;
  if (!other.ring_) return ring_;
  if (!compatible(*ring_, *other.ring_)) {
    throw Error(ErrorCode::kInvalidArgument,
                "elements of different rings: " + ring_->description() + " vs " +
                    other.ring_->description());
  }
  return ring_;
}

bool RingElement::is_homogeneous() const {
  if (terms_.size() <= 1) return true;
  return ring_->degree_of(terms_.begin()->first) == ring_->degree_of(terms_.rbegin()->first);
}

std::optional<int> RingElement::degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return ring_->degree_of(terms_.begin()->first);
}

bool RingElement::is_unit() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  if (!ring_->base().is_unit(c)) return false;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] != 0 && !ring_->generators()[k].invertible) return false;
  }
  return true;
}

RingElement RingElement::inverse() const {
  if (!is_unit()) throw Error(ErrorCode::kInvalidArgument, "not a unit: " + to_string());
  const auto& [e, c] = *terms_.begin();
  Exponents inv_e = e;
  for (int& k : inv_e) k = -k;
  return monomial(ring_, inv_e, ring_->base().inv(c));
}

Scalar RingElement::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  if (it != terms_.end()) return it->second;
  return ring_ ? ring_->base().zero() : Scalar();
}

std::optional<Scalar> RingElement::as_constant() const {
  if (terms_.empty()) return ring_ ? ring_->base().zero() : Scalar();
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  for (int k : e) {
    if (k != 0) return std::nullopt;
  }
  return c;
}

RingElement& RingElement::operator+=(const RingElement& other) {
  if (other.terms_.empty()) {
    if (!ring_) ring_ = other.ring_, terms_ = TermMap(GradedLexLess{ring_.get()});
    return *this;
  }
  RingPtr r = resolved(other);
  if (!ring_) {
    ring_ = r;
    terms_ = TermMap(GradedLexLess{ring_.get()});
  }
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) { return *this += -other; }

RingElement RingElement::operator+(const RingElement& other) const {
  RingElement out = *this;
  out += other;
  return out;
}

RingElement RingElement::operator-(const RingElement& other) const {
  RingElement out = *this;
  out += -other;
  return out;
}

RingElement RingElement::operator-() const {
  RingElement out(ring_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, ring_->base().neg(c));
  return out;
}

RingElement RingElement::operator*(const RingElement& other) const {
  RingPtr r = resolved(other);
  RingElement out(r);
  if (terms_.empty() || other.terms_.empty()) return out;
  const BaseRing& base = r->base();
  Exponents e(r->num_generators());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, base.mul(ca, cb));
    }
  }
  return out;
}

RingElement RingElement::scaled(const Scalar& c) const {
  RingElement out(ring_);
  if (!ring_) return out;
  for (const auto& [e, a] : terms_) out.add_term(e, ring_->base().mul(a, c));
  return out;
}

RingElement RingElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  if (!ring_) {
    if (e == 0) throw Error(ErrorCode::kInvalidArgument, "0^0 of a detached element");
    return *this;
  }
  RingElement result = one(ring_);
  RingElement base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool RingElement::operator==(const RingElement& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  for (; a != terms_.end(); ++a, ++b) {
    if (a->first != b->first || !(a->second == b->second)) return false;
  }
  return true;
}

bool RingElement::operator<(const RingElement& other) const {
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  for (; a != terms_.end() && b != other.terms_.end(); ++a, ++b) {
    if (a->first != b->first) return terms_.key_comp()(a->first, b->first);
    if (!(a->second == b->second)) return a->second < b->second;
  }
  return a == terms_.end() && b != other.terms_.end();
}

std::string RingElement::to_string() const {
  if (terms_.empty()) return "0";
  const BaseRing& base = ring_->base();
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string coeff = base.to_string(c);
    bool negative = false;
    if (!base.is_field() && coeff.front() == '-') {
      negative = true;
      coeff.erase(0, 1);
    }
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool has_monomial = false;
    std::ostringstream mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (has_monomial) mono << '*';
      mono << ring_->generators()[k].name;
      if (e[k] != 1) mono << '^' << e[k];
      has_monomial = true;
    }
    if (!has_monomial) {
      out << coeff;
    } else if (coeff == "1") {
      out << mono.str();
    } else {
      out << coeff << '*' << mono.str();
    }
  }
  return out.str();
}

RingElement RingElement::parse(RingPtr ring, std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorCode::kParse, "empty ring element");
  RingElement result(ring);
  const BaseRing& base = ring->base();

  // split at top-level + and - (not inside braces, not right after ^)
  std::vector<std::pair<bool, std::string>> terms;
  std::string current;
  bool negative = false;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '{') ++depth;
    if (c == '}') --depth;
    const bool sign = (c == '+' || c == '-') && depth == 0 && !(i > 0 && (s[i - 1] == '^' || s[i - 1] == '('));
    if (sign) {
      if (!current.empty()) terms.emplace_back(negative, current);
      else if (i > 0) throw Error(ErrorCode::kParse, "dangling sign in '" + s + "'");
      current.clear();
      negative = (c == '-');
    } else {
      current.push_back(c);
    }
  }
  if (current.empty()) throw Error(ErrorCode::kParse, "trailing sign in '" + s + "'");
  terms.emplace_back(negative, current);

  for (const auto& [neg, term] : terms) {
    Scalar coeff = base.one();
    Exponents e(ring->num_generators(), 0);
    std::string factor;
    // factors are separated by '*' outside braces
    std::vector<std::string> factors;
    depth = 0;
    for (char c : term) {
      if (c == '{') ++depth;
      if (c == '}') --depth;
      if (c == '*' && depth == 0) {
        factors.push_back(factor);
        factor.clear();
      } else {
        factor.push_back(c);
      }
    }
    factors.push_back(factor);
    for (const std::string& f : factors) {
      if (f.empty()) throw Error(ErrorCode::kParse, "empty factor in '" + term + "'");
      const unsigned char lead = static_cast<unsigned char>(f[0]);
      if (std::isdigit(lead) || f[0] == '{') {
        coeff = base.mul(coeff, base.parse(f));
        continue;
      }
      if (!(std::isalpha(lead) || f[0] == '_')) {
        throw Error(ErrorCode::kParse, "bad factor '" + f + "'");
      }
      const auto caret = f.find('^');
      const std::string name = f.substr(0, caret);
      const auto index = ring->generator_index(name);
      if (!index) throw Error(ErrorCode::kParse, "unknown generator '" + name + "'");
      long power = 1;
      if (caret != std::string::npos) {
        std::string exp = f.substr(caret + 1);
        if (exp.size() >= 2 && exp.front() == '(' && exp.back() == ')') exp = exp.substr(1, exp.size() - 2);
        try {
          std::size_t used = 0;
          power = std::stol(exp, &used);
          if (used != exp.size()) throw std::invalid_argument(exp);
        } catch (const std::exception&) {
          throw Error(ErrorCode::kParse, "bad exponent in '" + f + "'");
        }
      }
      e[*index] += static_cast<int>(power);
    }
    if (neg) coeff = base.neg(coeff);
    result += monomial(ring, e, coeff);
  }
  return result;
}

// ---------------------------------------------------------------- Slice

Count Slice::cardinality() const {
  if (!finite) return Count::infinite(witness);
  const auto q = ring->base().cardinality();
  return Count::power(*q, static_cast<long>(monomials.size()));
}

void Slice::for_each(const std::function<void(const RingElement&)>& visit) const {
  if (!finite) throw Error(ErrorCode::kInvalidArgument, "cannot enumerate an infinite slice");
  const std::vector<Scalar> scalars = ring->base().elements();
  const std::size_t q = scalars.size();
  std::vector<std::size_t> digits(monomials.size(), 0);
  while (true) {
    RingElement x(ring);
    for (std::size_t k = 0; k < monomials.size(); ++k) {
      if (digits[k] != 0) x += RingElement::monomial(ring, monomials[k], scalars[digits[k]]);
    }
    visit(x);
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == q) digits[k++] = 0;
    if (k == digits.size()) break;
  }
}

std::vector<RingElement> Slice::elements() const {
  std::vector<RingElement> out;
  for_each([&](const RingElement& x) { out.push_back(x); });
  return out;
}

bool Slice::contains(const RingElement& x) const {
  if (x.is_zero()) return true;
  const auto d = x.degree();
  return d && *d == degree;
}

namespace {

// Exponent vectors over the non-invertible generators listed in `indices`
// (all of positive degree) with total degree d.
void collect_monomials(const GradedRing& ring, const std::vector<std::size_t>& indices,
                       std::size_t at, int remaining, Exponents& current,
                       std::vector<Exponents>& out) {
  if (at == indices.size()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  const std::size_t g = indices[at];
  const int deg = ring.generators()[g].degree;
  for (int k = 0; k * deg <= remaining; ++k) {
    current[g] = k;
    collect_monomials(ring, indices, at + 1, remaining - k * deg, current, out);
  }
  current[g] = 0;
}

std::string monomial_name(const GradedRing& ring, const Exponents& e) {
  std::ostringstream out;
  bool any = false;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (any) out << '*';
    out << ring.generators()[k].name;
    if (e[k] != 1) out << '^' << e[k];
    any = true;
  }
  return any ? out.str() : "1";
}

}  // namespace

Slice homogeneous_slice(const RingPtr& ring, int degree) {
  Slice s;
  s.degree = degree;
  s.ring = ring;
  const GradedRing& r = *ring;
  if (r.truncation() && std::abs(degree) > r.truncation()->max_degree) {
    s.finite = false;
    s.witness = "degree " + std::to_string(degree) + " lies beyond the window bound " +
                std::to_string(r.truncation()->max_degree);
    return s;
  }

  std::vector<std::size_t> positive;
  std::vector<std::size_t> degree_zero;
  for (std::size_t k = 0; k < r.num_generators(); ++k) {
    if (r.generators()[k].invertible) continue;
    (r.generators()[k].degree == 0 ? degree_zero : positive).push_back(k);
  }
  const auto inv = r.invertible_index();
  std::vector<Exponents> monomials;
  Exponents current(r.num_generators(), 0);
  if (inv) {
    const int e = r.generators()[*inv].degree;
    if (e == 0) {
      std::vector<Exponents> base_monos;
      collect_monomials(r, positive, 0, degree, current, base_monos);
      if (!base_monos.empty()) {
        s.finite = false;
        s.witness = "all powers of the degree-0 unit " + r.generators()[*inv].name;
        return s;
      }
    } else if (!positive.empty() || !degree_zero.empty()) {
      int g = std::abs(e);
      for (std::size_t k : positive) g = std::gcd(g, r.generators()[k].degree);
      if (degree % g == 0) {
        s.finite = false;
        const std::size_t other = positive.empty() ? degree_zero.front() : positive.front();
        s.witness = "monomials " + r.generators()[other].name + "^a*" + r.generators()[*inv].name +
                    "^b of degree " + std::to_string(degree) + " for infinitely many a";
        return s;
      }
    } else if (degree % e == 0) {
      current[*inv] = degree / e;
      monomials.push_back(current);
    }
  } else {
    collect_monomials(r, positive, 0, degree, current, monomials);
    if (!monomials.empty() && !degree_zero.empty()) {
      s.finite = false;
      s.witness = "all powers of the degree-0 generator " + r.generators()[degree_zero.front()].name;
      return s;
    }
  }
  if (!monomials.empty() && !r.base().is_field()) {
    s.finite = false;
    s.witness = r.base().description() + "-multiples of " + monomial_name(r, monomials.front());
    s.monomials = std::move(monomials);
    return s;
  }
  s.monomials = std::move(monomials);
  return s;
}

// ---------------------------------------------------------------- RingMap

RingMap::RingMap(RingPtr source, RingPtr target, std::vector<RingElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->num_generators()) {
    throw Error(ErrorCode::kInvalidArgument, "ring map needs one image per generator");
  }
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (source_->generators()[k].invertible && !images_[k].is_unit()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "invertible generator " + source_->generators()[k].name + " must map to a unit");
    }
  }
}

RingMap RingMap::by_names(RingPtr source, RingPtr target) {
  std::vector<RingElement> images;
  for (const GeneratorSpec& g : source->generators()) {
    if (target->generator_index(g.name)) {
      images.push_back(RingElement::generator(target, g.name));
    } else if (g.invertible) {
      images.push_back(RingElement::one(target));
    } else {
      images.push_back(RingElement::zero(target));
    }
  }
  return RingMap(std::move(source), std::move(target), std::move(images));
}

RingElement RingMap::apply(const RingElement& x) const {
  RingElement out(target_);
  const BaseRing& from = source_->base();
  const BaseRing& to = target_->base();
  for (const auto& [e, c] : x.terms()) {
    RingElement term = RingElement::constant(target_, from.map_to(c, to));
    for (std::size_t k = 0; k < e.size() && !term.is_zero(); ++k) {
      if (e[k] != 0) term = term * images_[k].pow(e[k]);
    }
    out += term;
  }
  return out;
}

RingPtr residue_field_ring(const RingPtr& ring) {
  RingDescription d;
  d.base = ring->base().residue_field();
  return make_graded_ring(d);
}

RingMap residue_map(const RingPtr& ring) {
  RingPtr target = residue_field_ring(ring);
  std::vector<RingElement> images;
  for (const GeneratorSpec& g : ring->generators()) {
    images.push_back(g.invertible ? RingElement::one(target) : RingElement::zero(target));
  }
  return RingMap(ring, target, std::move(images));
}

}  // namespace qforms
