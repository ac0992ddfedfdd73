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

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "qforms/errors.hpp"
#include "qforms/product.hpp"

using namespace qforms;

namespace {

PresentationPtr toy(int p) {
  RingDescription d;
  d.base = BaseRing::finite_field(make_field(p, 1));
  d.generators = {{"u", 2, true}};
  return make_quotient("toy", nullptr, {{"x0", 0}, {"x1", 0}}, make_graded_ring(d));
}

PresentationPtr lubin_tate_k(int p, int n) {
  RingDescription d;
  d.base = BaseRing::finite_field(make_field(p, n));
  d.generators = {{"u", 2, true}};
  std::vector<SequenceGenerator> seq;
  for (int i = 0; i < n; ++i) seq.push_back({"u" + std::to_string(i), 0});
  return make_quotient("K_n", nullptr, seq, make_graded_ring(d));
}

PresentationPtr morava_k2(int n) {
  RingDescription d;
  d.base = BaseRing::finite_field(make_field(2, 1));
  d.generators = {{"v" + std::to_string(n), (1 << (n + 1)) - 2, true}};
  std::vector<SequenceGenerator> seq;
  for (int i = 0; i < n; ++i) seq.push_back({"v" + std::to_string(i), (1 << (i + 1)) - 2});
  return make_quotient("K(n)", nullptr, seq, make_graded_ring(d));
}

BasePtr zero_base(const PresentationPtr& f) { return make_base("mu", BilinearForm(f->module())); }

RingElement el(const PresentationPtr& f, const std::string& s) { return RingElement::parse(f->coefficients(), s); }

BilinearForm random_form(const PresentationPtr& f, std::mt19937& rng) {
  const SpaceDescription s = bil_space(f->module());
  BilinearForm b(f->module());
  for (std::size_t i = 0; i < f->size(); ++i)
    for (std::size_t j = 0; j < f->size(); ++j) {
      auto elems = s.slices[i][j].elements();
      std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
      b.set(i, j, elems[pick(rng)]);
    }
  return b;
}

BilinearForm random_alternating(const PresentationPtr& f, std::mt19937& rng) {
  BilinearForm r = random_form(f, rng);
  BilinearForm b(f->module());
  for (std::size_t i = 0; i < f->size(); ++i)
    for (std::size_t j = i + 1; j < f->size(); ++j) {
      b.set(i, j, r(i, j));
      b.set(j, i, -r(i, j));
    }
  return b;
}

MultiIndex mi(std::vector<int> v) { return MultiIndex::from_list(v); }

}  // namespace

TEST_CASE("multi-indices and wedge signs") {
  CHECK(mi({0, 2}).length() == 2);
  CHECK(mi({0, 2}).to_string() == "(0,2)");
  CHECK_THROWS_AS(mi({2, 1}), Error);
  CHECK(wedge_sign(mi({1}), mi({0})) == -1);
  CHECK(wedge_sign(mi({0}), mi({1})) == 1);
  CHECK(wedge_sign(mi({1, 2}), mi({0})) == 1);
  CHECK(wedge_sign(mi({0, 2}), mi({1})) == -1);
  CHECK(wedge_sign(mi({0}), mi({0})) == 0);
  CHECK(mi({3}) < mi({0, 1}));
}

TEST_CASE("Q operators anticommute and square to zero") {
  auto f = lubin_tate_k(3, 2);
  const RingPtr r = f->coefficients();
  const RingElement one = RingElement::one(r);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      EndoElement qi = EndoElement::term(r, MultiIndex::single(i), MultiIndex(), one);
      EndoElement qj = EndoElement::term(r, MultiIndex::single(j), MultiIndex(), one);
      CHECK((qi * qj + qj * qi).terms().empty());
    }
  EndoElement x = EndoElement::term(r, mi({0}), mi({1}), one);
  CHECK((x * x).terms().empty());
}

TEST_CASE("operator products agree with successive application") {
  std::mt19937 rng(11);
  auto f = lubin_tate_k(3, 3);
  const RingPtr r = f->coefficients();
  auto random_op = [&](bool pair) {
    EndoElement e(r);
    std::uniform_int_distribution<int> mask(0, 7);
    std::uniform_int_distribution<int> c(1, 8);
    for (int t = 0; t < 4; ++t)
      e.add(MultiIndex(mask(rng)), MultiIndex(pair ? mask(rng) : 0), RingElement::from_int(r, c(rng)));
    return e;
  };
  for (int trial = 0; trial < 30; ++trial) {
    EndoElement x = random_op(true);
    EndoElement y = random_op(true);
    LambdaPair v;
    v.emplace(std::make_pair(rng() % 8, rng() % 8), RingElement::one(r));
    v.emplace(std::make_pair(rng() % 8, rng() % 8), RingElement::from_int(r, 2));
    CHECK(apply_pair(x * y, v, r) == apply_pair(x, apply_pair(y, v, r), r));
    EndoElement a = random_op(false);
    EndoElement b = random_op(false);
    LambdaElement w = LambdaElement::basis(r, MultiIndex(7)) + LambdaElement::basis(r, MultiIndex(rng() % 8));
    CHECK(apply(a * b, w) == apply(a, apply(b, w)));
  }
}

TEST_CASE("expand_action examples") {
  auto f = toy(2);
  BasePtr base = zero_base(f);
  BilinearForm zero(f->module());
  CHECK(expand_action(zero, f, base).is_identity());

  BilinearForm single(f->module());
  single.set(0, 1, el(f, "u"));
  ProductTensor t = expand_action(single, f, base);
  CHECK(t.terms().size() == 1);
  CHECK(t.terms().at({mi({0}), mi({1})}) == el(f, "u"));

  // (1 + v Q0^Q1)(1 + w Q1^Q0): the cross term is
  // v w (-1)^{1*1} Q0 Q1 (x) Q1 Q0 = v w Q01 (x) Q01.
  auto g = lubin_tate_k(3, 2);
  BilinearForm two(g->module());
  two.set(0, 1, el(g, "u"));
  two.set(1, 0, el(g, "2*u"));
  ProductTensor t2 = expand_action(two, g, zero_base(g));
  CHECK(t2.terms().size() == 3);
  CHECK(t2.terms().at({mi({0, 1}), mi({0, 1})}) == el(g, "2*u^2"));
}

TEST_CASE("expand_action is independent of factor order") {
  std::mt19937 rng(3);
  auto f = lubin_tate_k(3, 2);
  std::vector<std::pair<std::size_t, std::size_t>> order = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  for (int trial = 0; trial < 20; ++trial) {
    BilinearForm b = random_form(f, rng);
    const EndoElement lex = action_factor(b);
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(action_factor(b, order) == lex);
  }
}

TEST_CASE("factorize round trip on K_n (p = 2, n = 2)") {
  std::mt19937 rng(5);
  auto f = lubin_tate_k(2, 2);
  BasePtr base = zero_base(f);
  for (int trial = 0; trial < 100; ++trial) {
    BilinearForm b = random_form(f, rng);
    CHECK(factorize(expand_action(b, f, base)) == b);
  }
  CHECK(factorize(ProductTensor(f, base)).is_zero());
}

TEST_CASE("factorize reports the minimal obstruction") {
  auto f = toy(2);
  BasePtr base = zero_base(f);
  ProductTensor::TermMap terms;
  terms.emplace(IndexPair{mi({0, 1}), mi({0})}, el(f, "u"));
  ProductTensor t = ProductTensor::unchecked(f, base, terms);
  Factorization r = try_factorize(t);
  REQUIRE_FALSE(r.ok());
  CHECK(r.obstruction->i == mi({0, 1}));
  CHECK(r.obstruction->j == mi({0}));
  CHECK(r.obstruction->value == el(f, "u"));
  try {
    factorize(t);
    FAIL("expected NotAProduct");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotAProduct);
  }
  CHECK_THROWS_AS(ProductTensor::from_terms(f, base, terms), Error);
  ProductTensor::TermMap unit_violation;
  unit_violation.emplace(IndexPair{MultiIndex(), mi({0})}, el(f, "u"));
  CHECK_THROWS_AS(ProductTensor::unchecked(f, base, unit_violation), Error);
}

TEST_CASE("product identity with alternating signs") {
  CHECK(product_identity_alternating(1));
  CHECK(product_identity_alternating(2));
  // hand expansion for n = 3: the coefficient of a1*a2*a3 is
  // 1 (three singles) - 3 (pair times single) + 1 (the triple) = -1
  IdentityCheck three = check_product_identity(3, [](int k) { return k % 2 ? 1L : -1L; });
  CHECK_FALSE(three.holds);
  CHECK(three.residual == "-a1*a2*a3");
  // n = 4: every triple keeps -1 and the quadruple picks up +1
  IdentityCheck four = check_product_identity(4, [](int k) { return k % 2 ? 1L : -1L; });
  CHECK_FALSE(four.holds);
  CHECK(four.residual == "-a1*a2*a3 - a1*a2*a4 - a1*a3*a4 - a2*a3*a4 + a1*a2*a3*a4");
}

TEST_CASE("product identity with logarithmic coefficients") {
  for (int n = 1; n <= 6; ++n) CHECK(product_identity_log(n));
}

TEST_CASE("alternating product identity inside the operator algebra") {
  // alpha_k = w_k Q_I (x) Q_J with |I| + |J| even commute and square to zero
  auto f = lubin_tate_k(3, 3);
  const RingPtr r = f->coefficients();
  std::vector<EndoElement> alpha = {
      EndoElement::term(r, mi({0}), mi({1}), el(f, "u^2")),
      EndoElement::term(r, mi({1}), mi({2}), el(f, "2*u^2")),
      EndoElement::term(r, mi({0, 2}), mi({0, 1}), el(f, "u^4")),
  };
  EndoElement prod = EndoElement::one(r);
  EndoElement sum = EndoElement::one(r);
  for (int k = 1; k <= 3; ++k) {
    for (std::uint32_t s = 1; s < 8; ++s) {
      if (std::popcount(s) != k) continue;
      EndoElement word = EndoElement::one(r);
      for (int i = 0; i < 3; ++i)
        if ((s >> i) & 1u) word = word * alpha[i];
      if (k % 2 == 0) word = EndoElement(r) - word;
      prod = prod * (EndoElement::one(r) + word);
    }
  }
  for (const auto& a : alpha) sum = sum + a;
  CHECK(prod == sum);
}

TEST_CASE("Lambda model multiplication") {
  auto f = lubin_tate_k(3, 3);
  const RingPtr r = f->coefficients();
  BasePtr base = zero_base(f);
  ProductTensor id(f, base);
  auto a = [&](std::vector<int> v) { return LambdaElement::basis(r, mi(v)); };
  CHECK(lambda_multiply(id, a({0}), a({2})) == a({0, 2}));
  CHECK(lambda_multiply(id, a({2}), a({0})) == LambdaElement(r) - a({0, 2}));

  BilinearForm b(f->module());
  b.set(0, 1, el(f, "u"));
  ProductTensor t = expand_action(b, f, base);
  CHECK(lambda_multiply(t, a({0}), a({1})) == a({0, 1}) - LambdaElement::basis(r, MultiIndex(), el(f, "u")));

  for (std::uint32_t s = 0; s < 8; ++s) {
    LambdaElement x = LambdaElement::basis(r, MultiIndex(s));
    CHECK(lambda_multiply(t, a({}), x) == x);
    CHECK(lambda_multiply(t, x, a({})) == x);
  }
}

TEST_CASE("associativity") {
  std::mt19937 rng(9);
  auto f = lubin_tate_k(3, 2);
  BasePtr base = zero_base(f);
  CHECK(is_associative(ProductTensor(f, base)));
  for (int trial = 0; trial < 10; ++trial) {
    CHECK(is_associative(expand_action(random_form(f, rng), f, base), 6));
  }
  auto g = toy(2);
  ProductTensor::TermMap terms;
  terms.emplace(IndexPair{mi({0, 1}), mi({0})}, el(g, "u"));
  CHECK_FALSE(is_associative(ProductTensor::unchecked(g, zero_base(g), terms)));
  ProductTensor::TermMap deep;
  deep.emplace(IndexPair{mi({0, 1}), mi({0, 1})}, el(g, "u^2"));
  CHECK_FALSE(is_associative(ProductTensor::from_terms(g, zero_base(g), deep)));
}

TEST_CASE("characteristic forms: K(n), p = 2") {
  for (int n = 1; n <= 4; ++n) {
    auto f = morava_k2(n);
    BilinearForm bb(f->module());
    bb.set(n - 1, n - 1, el(f, "v" + std::to_string(n)));
    BasePtr base = make_base("mu", bb);
    ProductTensor mu(f, base);
    CHECK(characteristic_form(mu) == bb);
    ProductTensor bar = act(bb, mu);
    CHECK(characteristic_form(bar) == bb);
    CHECK(model_characteristic_form(bar) == bb);
    ProductTensor op = opposite(mu);
    CHECK(op.terms().size() == 1);
    CHECK(op.terms().at({MultiIndex::single(n - 1), MultiIndex::single(n - 1)}) == el(f, "v" + std::to_string(n)));
    CHECK(op == bar);
    CHECK(opposite(op) == mu);
  }
}

TEST_CASE("unit law, Lambda-model forms, symmetry and opposite involution") {
  std::mt19937 rng(21);
  for (auto [p, n] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{5, 1}}) {
    auto f = lubin_tate_k(p, n);
    BilinearForm bb(f->module());
    if (p == 2) bb.set(n - 1, n - 1, el(f, "u"));
    BasePtr base = make_base("mu", bb);
    ProductTensor mu(f, base);
    for (int trial = 0; trial < 20; ++trial) {
      BilinearForm beta = random_form(f, rng);
      ProductTensor t = act(beta, mu);
      BilinearForm b = characteristic_form(t);
      CHECK(b == bb - (beta + transpose(beta)));
      CHECK(model_characteristic_form(t) == b);
      CHECK(classify_form(b).symmetric);
      CHECK(characteristic_form(opposite(t)) == -b);
      CHECK(opposite(opposite(t)) == t);
      const RingPtr r = f->coefficients();
      for (std::uint32_t s = 0; s < (1u << n); ++s) {
        LambdaElement x = LambdaElement::basis(r, MultiIndex(s), el(f, "2"));
        CHECK(lambda_multiply(t, LambdaElement::basis(r, MultiIndex()), x) == x);
        CHECK(lambda_multiply(t, x, LambdaElement::basis(r, MultiIndex())) == x);
      }
    }
  }
}

TEST_CASE("group action laws") {
  std::mt19937 rng(2);
  auto f = lubin_tate_k(3, 2);
  ProductTensor mu(f, zero_base(f));
  for (int trial = 0; trial < 20; ++trial) {
    BilinearForm b1 = random_form(f, rng);
    BilinearForm b2 = random_form(f, rng);
    CHECK(act(b2, act(b1, mu)) == act(b1 + b2, mu));
  }
  CHECK(act(BilinearForm(f->module()), mu) == mu);
  auto g = lubin_tate_k(2, 2);
  ProductTensor nu(g, zero_base(g));
  std::set<ProductTensor> orbit;
  for_each_form(bil_space(g->module()), [&](const BilinearForm& b) {
    orbit.insert(act(b, nu));
    return true;
  });
  CHECK(orbit.size() == 256);
}

TEST_CASE("theta") {
  auto f = lubin_tate_k(3, 3);
  const RingPtr r = f->coefficients();
  CHECK(theta(BilinearForm(f->module())) == EndoElement::one(r));
  BilinearForm b(f->module());
  b.set(0, 1, el(f, "u"));
  b.set(1, 0, el(f, "-u"));
  EndoElement expected = EndoElement::one(r);
  expected.add(mi({0, 1}), MultiIndex(), el(f, "u"));
  CHECK(theta(b) == expected);
  CHECK(theta(b) * theta_inverse(b) == EndoElement::one(r));
  BilinearForm sym(f->module());
  sym.set(0, 0, el(f, "u"));
  CHECK_THROWS_AS(theta(sym), Error);

  EndoElement degenerate = EndoElement::one(r) * EndoElement::term(r, mi({0}), MultiIndex(), el(f, "1")) *
                           EndoElement::term(r, mi({0}), MultiIndex(), el(f, "1"));
  CHECK(degenerate.terms().empty());
}

TEST_CASE("theta witnesses multiplicative equivalences") {
  std::mt19937 rng(4);
  for (auto [p, n] : {std::pair{3, 2}, std::pair{2, 3}}) {
    auto f = lubin_tate_k(p, n);
    BilinearForm bb(f->module());
    if (p == 2) bb.set(n - 1, n - 1, el(f, "u"));
    ProductTensor mu(f, make_base("mu", bb));
    for (int trial = 0; trial < 10; ++trial) {
      BilinearForm alt = random_alternating(f, rng);
      BilinearForm start = random_form(f, rng);
      ProductTensor t = act(start, mu);
      CHECK(verify_mult_equiv(theta(alt), t, act(alt, t)));
      CHECK(verify_mult_equiv(theta_inverse(alt), act(alt, t), t));
    }
    CHECK(verify_mult_equiv(EndoElement::one(f->coefficients()), mu, mu));
  }
}

TEST_CASE("no equivalence witness for symmetric non-alternating forms on the toy instance") {
  auto f = toy(2);
  ProductTensor mu(f, zero_base(f));
  BilinearForm s(f->module());
  s.set(0, 0, el(f, "u"));
  WitnessSearch w = search_equivalence_witness(mu, act(s, mu));
  CHECK(w.exhaustive);
  CHECK_FALSE(w.witness);
  CHECK(w.candidates > 0);
  BilinearForm alt(f->module());
  alt.set(0, 1, el(f, "u"));
  alt.set(1, 0, el(f, "u"));
  WitnessSearch ok = search_equivalence_witness(mu, act(alt, mu));
  CHECK(ok.witness);
}

TEST_CASE("relative transformation rules") {
  std::mt19937 rng(8);
  auto f = lubin_tate_k(3, 2);
  ProductTensor mu(f, zero_base(f));
  for (int trial = 0; trial < 20; ++trial) {
    BilinearForm bf = characteristic_form(act(random_form(f, rng), mu));
    BilinearForm beta = random_form(f, rng);
    RelativeRule left{RelativeRuleKind::kTwistLeft, beta, std::nullopt, std::nullopt};
    BilinearForm relative = relative_transform(left, bf);
    CHECK(relative == bf - beta);
    RelativeRule right{RelativeRuleKind::kTwistRight, beta, std::nullopt, std::nullopt};
    CHECK(relative_transform(right, relative) == bf - (beta + transpose(beta)));
    RelativeRule op{RelativeRuleKind::kOpPair, std::nullopt, std::nullopt, std::nullopt};
    CHECK(relative_transform(op, bf) == -bf);
    RelativeRule none{RelativeRuleKind::kTwistLeft, BilinearForm(f->module()), std::nullopt, std::nullopt};
    CHECK(relative_transform(none, bf) == bf);
  }
}
