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

#include "qforms/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include "qforms/errors.hpp"

namespace qforms {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPrime: return "NonPrime";
    case ErrorCode::kNoIrreducibleFound: return "NoIrreducibleFound";
    case ErrorCode::kOddDegreeGenerator: return "OddDegreeGenerator";
    case ErrorCode::kMultipleInvertibleGenerators: return "MultipleInvertibleGenerators";
    case ErrorCode::kEmptyTruncationForInfinitePresentation:
      return "EmptyTruncationForInfinitePresentation";
    case ErrorCode::kInconsistentCoefficients: return "InconsistentCoefficients";
    case ErrorCode::kOddSequenceDegree: return "OddSequenceDegree";
    case ErrorCode::kDegreeMismatch: return "DegreeMismatch";
    case ErrorCode::kNotSymmetric: return "NotSymmetric";
    case ErrorCode::kNotAProduct: return "NotAProduct";
    case ErrorCode::kNotAlternating: return "NotAlternating";
    case ErrorCode::kDifferentBase: return "DifferentBase";
    case ErrorCode::kNotSmooth: return "NotSmooth";
    case ErrorCode::kUnsupportedParams: return "UnsupportedParams";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

int mod(long a, int p) {
  long r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

// Polynomials over F_p as coefficient vectors a_0..a_d, trimmed.
using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  int lead_inv = 1;
  while (mod(static_cast<long>(lead_inv) * m.back(), p) != 1) ++lead_inv;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int factor = mod(static_cast<long>(a.back()) * lead_inv, p);
    for (int k = 0; k <= dm; ++k) {
      a[shift + k] = mod(a[shift + k] - static_cast<long>(factor) * m[k], p);
    }
    trim(a);
  }
  return a;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<int>& coefficients, int p) {
  Poly f = coefficients;
  for (int& c : f) c = mod(c, p);
  trim(f);
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  for (int d = 1; d <= deg / 2; ++d) {
    // every monic divisor candidate of degree d
    long count = 1;
    for (int k = 0; k < d; ++k) count *= p;
    for (long code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      long c = code;
      for (int k = 0; k < d; ++k) {
        g[k] = static_cast<int>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FiniteField make_field(int p, int n) {
  if (!is_prime(p)) throw Error(ErrorCode::kNonPrime, "p = " + std::to_string(p));
  if (n < 1 || n > 4) {
    throw Error(ErrorCode::kUnsupportedParams,
                "extension degree must lie in [1, 4], got " + std::to_string(n));
  }
  static std::mutex cache_mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const FiniteField::Impl>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  if (auto it = cache.find({p, n}); it != cache.end()) return FiniteField(it->second);

  auto impl = std::make_shared<FiniteField::Impl>();
  impl->p = p;
  impl->n = n;
  impl->q = 1;
  for (int k = 0; k < n; ++k) impl->q *= static_cast<FiniteField::Elem>(p);

  if (n == 1) {
    impl->modulus = {0, 1};
  } else {
    bool found = false;
    for (FiniteField::Elem code = 0; code < impl->q && !found; ++code) {
      Poly m(n + 1, 0);
      FiniteField::Elem c = code;
      for (int k = 0; k < n; ++k) {
        m[k] = static_cast<int>(c % p);
        c /= p;
      }
      m[n] = 1;
      if (is_irreducible_mod_p(m, p)) {
        impl->modulus = m;
        found = true;
      }
    }
    if (!found) {
      throw Error(ErrorCode::kNoIrreducibleFound,
                  "F_" + std::to_string(p) + "^" + std::to_string(n));
    }
  }

  // Multiplication by polynomial arithmetic, used only to build the tables.
  auto decode = [&](FiniteField::Elem a) {
    Poly out(n, 0);
    for (int k = 0; k < n; ++k) {
      out[k] = static_cast<int>(a % p);
      a /= p;
    }
    return out;
  };
  auto encode = [&](const Poly& a) {
    FiniteField::Elem code = 0;
    for (int k = static_cast<int>(a.size()) - 1; k >= 0; --k) {
      code = code * p + static_cast<FiniteField::Elem>(a[k]);
    }
    return code;
  };
  auto slow_mul = [&](FiniteField::Elem a, FiniteField::Elem b) {
    const Poly x = decode(a);
    const Poly y = decode(b);
    Poly prod(2 * n, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        prod[i + j] = mod(prod[i + j] + static_cast<long>(x[i]) * y[j], p);
      }
    }
    Poly r = n == 1 ? Poly{prod[0]} : poly_mod(prod, impl->modulus, p);
    r.resize(n, 0);
    return encode(r);
  };

  const FiniteField::Elem q = impl->q;
  for (FiniteField::Elem g = 1; g < q; ++g) {
    std::vector<FiniteField::Elem> powers;
    powers.reserve(q - 1);
    FiniteField::Elem x = 1;
    bool primitive = true;
    for (FiniteField::Elem k = 0; k + 1 < q; ++k) {
      if (k > 0 && x == 1) {
        primitive = false;
        break;
      }
      powers.push_back(x);
      x = slow_mul(x, g);
    }
    if (primitive && x == 1) {
      impl->exp_table = std::move(powers);
      break;
    }
  }
  impl->log_table.assign(q, -1);
  for (std::size_t k = 0; k < impl->exp_table.size(); ++k) {
    impl->log_table[impl->exp_table[k]] = static_cast<int>(k);
  }
  cache.emplace(std::make_pair(p, n), impl);
  return FiniteField(impl);
}

FiniteField::Elem FiniteField::from_int(long value) const {
  return static_cast<Elem>(mod(value, impl_->p));
}

FiniteField::Elem FiniteField::generator() const {
  return impl_->n == 1 ? 0 : static_cast<Elem>(impl_->p);
}

std::vector<int> FiniteField::digits(Elem a) const {
  std::vector<int> out(impl_->n, 0);
  for (int k = 0; k < impl_->n; ++k) {
    out[k] = static_cast<int>(a % impl_->p);
    a /= impl_->p;
  }
  return out;
}

FiniteField::Elem FiniteField::from_digits(const std::vector<int>& digits) const {
  if (static_cast<int>(digits.size()) > impl_->n) {
    throw Error(ErrorCode::kInvalidArgument, "too many digits for field element");
  }
  Elem code = 0;
  for (int k = static_cast<int>(digits.size()) - 1; k >= 0; --k) {
    code = code * impl_->p + static_cast<Elem>(mod(digits[k], impl_->p));
  }
  return code;
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  const int p = impl_->p;
  Elem out = 0;
  Elem scale = 1;
  for (int k = 0; k < impl_->n; ++k) {
    out += scale * static_cast<Elem>((a % p + b % p) % p);
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  const int p = impl_->p;
  Elem out = 0;
  Elem scale = 1;
  for (int k = 0; k < impl_->n; ++k) {
    out += scale * static_cast<Elem>((p - static_cast<int>(a % p)) % p);
    a /= p;
    scale *= p;
  }
  return out;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  const auto order = static_cast<int>(impl_->q - 1);
  return impl_->exp_table[(impl_->log_table[a] + impl_->log_table[b]) % order];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::kInvalidArgument, "inverse of zero");
  const auto order = static_cast<int>(impl_->q - 1);
  return impl_->exp_table[(order - impl_->log_table[a]) % order];
}

FiniteField::Elem FiniteField::pow(Elem a, long e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) throw Error(ErrorCode::kInvalidArgument, "negative power of zero");
    return 0;
  }
  const long order = static_cast<long>(impl_->q - 1);
  long k = (static_cast<long>(impl_->log_table[a]) * (e % order)) % order;
  if (k < 0) k += order;
  return impl_->exp_table[k];
}

bool Scalar::operator==(const Scalar& other) const {
  if (value_.index() != other.value_.index()) return false;
  if (is_field()) return code() == other.code();
  return rational() == other.rational();
}

bool Scalar::operator<(const Scalar& other) const {
  if (value_.index() != other.value_.index()) return value_.index() < other.value_.index();
  if (is_field()) return code() < other.code();
  return rational() < other.rational();
}

BaseRing BaseRing::p_local(int p) {
  if (!is_prime(p)) throw Error(ErrorCode::kNonPrime, "p = " + std::to_string(p));
  return BaseRing(p);
}

const FiniteField& BaseRing::field() const {
  if (!field_) throw Error(ErrorCode::kInvalidArgument, "Z_(p) is not a finite field");
  return *field_;
}

std::optional<std::uint64_t> BaseRing::cardinality() const {
  if (is_field()) return field_->order();
  return std::nullopt;
}

Scalar BaseRing::zero() const { return is_field() ? Scalar(FiniteField::Elem{0}) : Scalar(mpq_class(0)); }
Scalar BaseRing::one() const { return is_field() ? Scalar(FiniteField::Elem{1}) : Scalar(mpq_class(1)); }

Scalar BaseRing::from_int(long value) const {
  if (is_field()) return Scalar(field_->from_int(value));
  return Scalar(mpq_class(value));
}

Scalar BaseRing::add(const Scalar& a, const Scalar& b) const {
  if (is_field()) return Scalar(field_->add(a.code(), b.code()));
  return Scalar(mpq_class(a.rational() + b.rational()));
}

Scalar BaseRing::sub(const Scalar& a, const Scalar& b) const {
  if (is_field()) return Scalar(field_->sub(a.code(), b.code()));
  return Scalar(mpq_class(a.rational() - b.rational()));
}

Scalar BaseRing::neg(const Scalar& a) const {
  if (is_field()) return Scalar(field_->neg(a.code()));
  return Scalar(mpq_class(-a.rational()));
}

Scalar BaseRing::mul(const Scalar& a, const Scalar& b) const {
  if (is_field()) return Scalar(field_->mul(a.code(), b.code()));
  return Scalar(mpq_class(a.rational() * b.rational()));
}

bool BaseRing::is_zero(const Scalar& a) const {
  if (is_field()) return a.code() == 0;
  return sgn(a.rational()) == 0;
}

bool BaseRing::is_unit(const Scalar& a) const {
  if (is_field()) return a.code() != 0;
  if (sgn(a.rational()) == 0) return false;
  // numerator must be prime to p (the denominator always is)
  return mpz_divisible_ui_p(a.rational().get_num_mpz_t(), static_cast<unsigned long>(p_)) == 0;
}

Scalar BaseRing::inv(const Scalar& a) const {
  if (!is_unit(a)) throw Error(ErrorCode::kInvalidArgument, "not a unit: " + to_string(a));
  if (is_field()) return Scalar(field_->inv(a.code()));
  mpq_class r = 1 / a.rational();
  r.canonicalize();
  return Scalar(r);
}

std::vector<Scalar> BaseRing::elements() const {
  std::vector<Scalar> out;
  for (FiniteField::Elem c = 0; c < field().order(); ++c) out.emplace_back(c);
  return out;
}

BaseRing BaseRing::residue_field() const {
  if (is_field()) return *this;
  return finite_field(make_field(p_, 1));
}

Scalar BaseRing::residue(const Scalar& a, const BaseRing& residue_ring) const {
  if (is_field()) return a;
  const FiniteField& f = residue_ring.field();
  mpz_class num = a.rational().get_num() % p_;
  mpz_class den = a.rational().get_den() % p_;
  const long n = num.get_si();
  const long d = den.get_si();
  return Scalar(f.mul(f.from_int(n), f.inv(f.from_int(d))));
}

Scalar BaseRing::map_to(const Scalar& a, const BaseRing& target) const {
  if (*this == target) return a;
  if (!is_field()) {
    if (!target.is_field() || target.prime() != p_) {
      throw Error(ErrorCode::kInvalidArgument, "no ring map " + description() + " -> " + target.description());
    }
    const Scalar r = residue(a, residue_field());
    return Scalar(target.field().from_int(static_cast<long>(r.code())));
  }
  if (target.is_field() && target.prime() == p_ && field().degree() == 1) {
    return Scalar(target.field().from_int(static_cast<long>(a.code())));
  }
  throw Error(ErrorCode::kInvalidArgument, "no ring map " + description() + " -> " + target.description());
}

std::string BaseRing::to_string(const Scalar& a) const {
  if (!is_field()) return a.rational().get_str();
  if (a.code() < static_cast<FiniteField::Elem>(p_)) return std::to_string(a.code());
  std::ostringstream out;
  out << '{';
  const auto digits = field_->digits(a.code());
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (k) out << ',';
    out << digits[k];
  }
  out << '}';
  return out.str();
}

Scalar BaseRing::parse(std::string_view text) const {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorCode::kParse, "empty coefficient");
  if (s.front() == '{') {
    if (!is_field() || s.back() != '}') throw Error(ErrorCode::kParse, "bad field element '" + s + "'");
    std::vector<int> digits;
    std::stringstream in(s.substr(1, s.size() - 2));
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        digits.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw Error(ErrorCode::kParse, "bad digit '" + item + "'");
      }
    }
    return Scalar(field_->from_digits(digits));
  }
  mpq_class q;
  try {
    q = mpq_class(s, 10);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParse, "bad coefficient '" + s + "'");
  }
  if (q.get_den() == 0) throw Error(ErrorCode::kParse, "zero denominator in '" + s + "'");
  q.canonicalize();
  if (mpz_divisible_ui_p(q.get_den_mpz_t(), static_cast<unsigned long>(p_)) != 0) {
    throw Error(ErrorCode::kParse, "denominator divisible by p in '" + s + "'");
  }
  if (!is_field()) return Scalar(q);
  const FiniteField& f = *field_;
  const long n = mpz_class(q.get_num() % p_).get_si();
  const long d = mpz_class(q.get_den() % p_).get_si();
  return Scalar(f.mul(f.from_int(n), f.inv(f.from_int(d))));
}

std::string BaseRing::description() const {
  if (!is_field()) return "Z_(" + std::to_string(p_) + ")";
  if (field_->degree() == 1) return "F_" + std::to_string(p_);
  return "F_" + std::to_string(p_) + "^" + std::to_string(field_->degree());
}

bool BaseRing::operator==(const BaseRing& other) const {
  if (kind_ != other.kind_ || p_ != other.p_) return false;
  if (is_field()) return *field_ == *other.field_;
  return true;
}

}  // namespace qforms
