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

#include <vector>

#include "doctest.h"
#include "qforms/errors.hpp"
#include "qforms/scalar.hpp"

using namespace qforms;

namespace {

// Reference multiplication: schoolbook product of digit vectors reduced by
// the modulus, written independently of the table-driven field code.
std::vector<int> ref_mul(const std::vector<int>& a, const std::vector<int>& b,
                         const std::vector<int>& m, int p) {
  const int n = static_cast<int>(m.size()) - 1;
  std::vector<int> prod(2 * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (int k = 2 * n - 1; k >= n; --k) {
    const int c = prod[k];
    if (c == 0) continue;
    for (int t = 0; t <= n; ++t) prod[k - n + t] = ((prod[k - n + t] - c * m[t]) % p + p) % p;
  }
  prod.resize(n);
  return prod;
}

}  // namespace

TEST_CASE("prime field F_2") {
  FiniteField f = make_field(2, 1);
  CHECK(f.order() == 2);
  CHECK(f.add(1, 1) == 0);
}

TEST_CASE("F_9 modulus is t^2+1 and t*t = -1") {
  FiniteField f = make_field(3, 2);
  CHECK(f.modulus() == std::vector<int>{1, 0, 1});
  // no root in F_3
  for (int x = 0; x < 3; ++x) CHECK((x * x + 1) % 3 != 0);
  const auto t = f.generator();
  CHECK(f.mul(t, t) == f.from_int(-1));
  CHECK(f.mul(t, t) == 2);
}

TEST_CASE("F_4 modulus is t^2+t+1 and t*t = t+1") {
  FiniteField f = make_field(2, 2);
  CHECK(f.modulus() == std::vector<int>{1, 1, 1});
  for (int x = 0; x < 2; ++x) CHECK((x * x + x + 1) % 2 != 0);
  const auto t = f.generator();
  CHECK(f.mul(t, t) == f.add(t, f.one()));
}

TEST_CASE("field axioms and reference multiplication for q <= 81") {
  const std::vector<std::pair<int, int>> fields = {{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2},
                                                   {2, 3}, {5, 2}, {3, 3}, {2, 4}, {3, 4}};
  for (auto [p, n] : fields) {
    CAPTURE(p);
    CAPTURE(n);
    FiniteField f = make_field(p, n);
    CHECK(is_irreducible_mod_p(f.modulus(), p));
    const auto q = f.order();
    bool ok = true;
    for (FiniteField::Elem a = 0; a < q && ok; ++a) {
      if (f.add(a, f.neg(a)) != 0) ok = false;
      if (a != 0 && f.mul(a, f.inv(a)) != 1) ok = false;
      for (FiniteField::Elem b = 0; b < q && ok; ++b) {
        if (f.mul(a, b) != f.from_digits(ref_mul(f.digits(a), f.digits(b), f.modulus(), p))) ok = false;
        if (f.mul(a, b) != f.mul(b, a) || f.add(a, b) != f.add(b, a)) ok = false;
      }
    }
    CHECK(ok);
    if (q <= 27) {
      for (FiniteField::Elem a = 0; a < q; ++a)
        for (FiniteField::Elem b = 0; b < q; ++b)
          for (FiniteField::Elem c = 0; c < q; ++c) {
            if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) ok = false;
            if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) ok = false;
          }
      CHECK(ok);
    }
  }
}

TEST_CASE("make_field errors") {
  CHECK_THROWS_AS(make_field(4, 1), Error);
  try {
    make_field(9, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNonPrime);
  }
}

TEST_CASE("p-local integers") {
  BaseRing z3 = BaseRing::p_local(3);
  Scalar half = z3.parse("1/2");
  CHECK(z3.to_string(z3.mul(half, z3.from_int(2))) == "1");
  CHECK(z3.is_unit(half));
  CHECK_FALSE(z3.is_unit(z3.from_int(3)));
  CHECK_THROWS_AS(z3.parse("1/3"), Error);
  CHECK_THROWS_AS(z3.inv(z3.from_int(6)), Error);
  CHECK(z3.to_string(z3.inv(z3.parse("-2/5"))) == "-5/2");
  BaseRing f3 = z3.residue_field();
  CHECK(f3.is_field());
  CHECK(z3.map_to(half, f3) == Scalar(FiniteField::Elem{2}));
}

TEST_CASE("scalar printing round trip in F_9") {
  BaseRing f9 = BaseRing::finite_field(make_field(3, 2));
  for (const Scalar& s : f9.elements()) CHECK(f9.parse(f9.to_string(s)) == s);
  CHECK(f9.to_string(Scalar(FiniteField::Elem{3})) == "{0,1}");
}
