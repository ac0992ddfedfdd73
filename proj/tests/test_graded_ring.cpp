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

#include <random>

#include "doctest.h"
#include "qforms/errors.hpp"
#include "qforms/graded_ring.hpp"

using namespace qforms;

namespace {

RingPtr k2_ring() {
  RingDescription d;
  d.base = BaseRing::finite_field(make_field(2, 1));
  d.generators = {{"v", 6, true}};
  return make_graded_ring(d);
}

RingPtr mu_ring() {
  RingDescription d;
  d.base = BaseRing::finite_field(make_field(2, 1));
  d.generators = {{"x2", 4, false}, {"x3", 6, false}, {"x4", 8, false}, {"x5", 10, false}};
  d.infinite_tail = true;
  d.truncation = Truncation{4, 10};
  return make_graded_ring(d);
}

RingElement random_element(const RingPtr& r, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(0, 8);
  std::uniform_int_distribution<int> expo(0, 2);
  RingElement x(r);
  for (int t = 0; t < 3; ++t) {
    Exponents e(r->num_generators());
    for (std::size_t k = 0; k < e.size(); ++k) {
      e[k] = expo(rng) - (r->generators()[k].invertible ? 1 : 0);
    }
    x += RingElement::monomial(r, e, r->base().from_int(coeff(rng)));
  }
  return x;
}

}  // namespace

TEST_CASE("K(2) at p=2: slice of degree 6 is {0, v}") {
  RingPtr r = k2_ring();
  Slice s = homogeneous_slice(r, 6);
  REQUIRE(s.finite);
  auto elems = s.elements();
  REQUIRE(elems.size() == 2);
  CHECK(elems[0].is_zero());
  CHECK(elems[1] == RingElement::generator(r, "v"));
  CHECK(homogeneous_slice(r, 4).elements().size() == 1);
  CHECK(homogeneous_slice(r, -12).monomials.size() == 1);
}

TEST_CASE("K_n coefficients: slice of degree 2 has p^n elements") {
  RingDescription d;
  d.base = BaseRing::finite_field(make_field(3, 2));
  d.generators = {{"u", 2, true}};
  RingPtr r = make_graded_ring(d);
  Slice s = homogeneous_slice(r, 2);
  CHECK(s.cardinality().value() == 9);
  CHECK(s.elements().size() == 9);
  CHECK(r->is_graded_field());
}

TEST_CASE("BP over Z_(p) gives infinite slices") {
  RingDescription d;
  d.base = BaseRing::p_local(3);
  d.generators = {{"v1", 4, false}, {"v2", 16, false}};
  d.infinite_tail = true;
  d.truncation = Truncation{2, 16};
  RingPtr r = make_graded_ring(d);
  Slice s = homogeneous_slice(r, 4);
  CHECK_FALSE(s.finite);
  CHECK(s.witness == "Z_(3)-multiples of v1");
  CHECK(homogeneous_slice(r, 6).finite);
  CHECK_FALSE(homogeneous_slice(r, 18).finite);
}

TEST_CASE("truncated MU window slices") {
  RingPtr r = mu_ring();
  CHECK(homogeneous_slice(r, 4).cardinality().value() == 2);
  CHECK(homogeneous_slice(r, 8).cardinality().value() == 4);  // x2^2, x4
  CHECK(homogeneous_slice(r, 2).cardinality().value() == 1);
  CHECK(homogeneous_slice(r, -2).cardinality().value() == 1);
  CHECK_FALSE(homogeneous_slice(r, 12).finite);
}

TEST_CASE("ring description validation") {
  RingDescription d;
  d.base = BaseRing::finite_field(make_field(2, 1));
  d.generators = {{"x", 3, false}};
  try {
    make_graded_ring(d);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOddDegreeGenerator);
  }
  d.generators = {{"u", 2, true}, {"v", 4, true}};
  try {
    make_graded_ring(d);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMultipleInvertibleGenerators);
  }
  d.generators = {{"x", 2, false}};
  d.infinite_tail = true;
  try {
    make_graded_ring(d);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEmptyTruncationForInfinitePresentation);
  }
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937 rng(7);
  RingDescription d;
  d.base = BaseRing::finite_field(make_field(3, 2));
  d.generators = {{"u", 2, true}, {"x", 4, false}};
  const RingPtr laurent = make_graded_ring(d);
  d.base = BaseRing::p_local(5);
  const RingPtr local = make_graded_ring(d);
  for (const RingPtr& r : {laurent, local}) {
    for (int trial = 0; trial < 100; ++trial) {
      RingElement a = random_element(r, rng);
      RingElement b = random_element(r, rng);
      RingElement c = random_element(r, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (b - a) == b);
      CHECK(a * RingElement::one(r) == a);
      CHECK((a - a).is_zero());
    }
  }
}

TEST_CASE("degrees add and units invert") {
  RingPtr r = mu_ring();
  RingElement x2 = RingElement::generator(r, "x2");
  RingElement x3 = RingElement::generator(r, "x3");
  CHECK((x2 * x3).degree() == 10);
  CHECK_FALSE((x2 + x3).is_homogeneous());
  CHECK_FALSE(x2.is_unit());
  RingPtr k = k2_ring();
  RingElement v = RingElement::generator(k, "v");
  CHECK(v.is_unit());
  CHECK(v * v.inverse() == RingElement::one(k));
  CHECK(v.pow(-2).degree() == -12);
}

TEST_CASE("parse and print round trip") {
  RingDescription d;
  d.base = BaseRing::p_local(3);
  d.generators = {{"u", 2, true}, {"x", 4, false}};
  RingPtr r = make_graded_ring(d);
  RingElement a = RingElement::parse(r, "3/2*u^-1*x - 5*x^2 + 1");
  CHECK(RingElement::parse(r, a.to_string()) == a);
  CHECK(RingElement::parse(r, "u^(-1)") == RingElement::generator(r, "u").inverse());
  CHECK(RingElement::parse(r, "x - x").is_zero());
  CHECK_THROWS_AS(RingElement::parse(r, "y"), Error);
  CHECK_THROWS_AS(RingElement::parse(r, "x^-1"), Error);
  CHECK_THROWS_AS(RingElement::parse(r, "x +"), Error);

  RingDescription f9;
  f9.base = BaseRing::finite_field(make_field(3, 2));
  f9.generators = {{"u", 2, true}};
  RingPtr k = make_graded_ring(f9);
  RingElement b = RingElement::parse(k, "{1,2}*u + {0,1}*u^-1");
  CHECK(RingElement::parse(k, b.to_string()) == b);
}

TEST_CASE("finite slices are closed under addition and scaling") {
  RingPtr r = mu_ring();
  Slice s = homogeneous_slice(r, 10);
  auto elems = s.elements();
  CHECK(elems.size() == 4);  // monomials x2*x3 and x5
  for (const auto& a : elems)
    for (const auto& b : elems) CHECK(s.contains(a + b));
}

TEST_CASE("ring maps") {
  RingPtr r = mu_ring();
  RingMap id = RingMap::by_names(r, r);
  RingElement a = RingElement::parse(r, "x2*x3 + x5");
  CHECK(id.apply(a) == a);
  RingMap res = residue_map(k2_ring());
  CHECK(res.apply(RingElement::generator(k2_ring(), "v")) == RingElement::one(res.target()));
}

TEST_CASE("symbolic counts") {
  Count c = Count::power(9, 4);
  CHECK(c.symbolic() == "9^4");
  CHECK(c.value() == 6561);
  CHECK((c / Count::power(9, 1)).symbolic() == "9^3");
  CHECK((c * Count::power(9, 2)).exponent() == 6);
  CHECK(Count::infinite("x").is_infinite());
}
