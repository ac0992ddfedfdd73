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

#include <set>

#include "doctest.h"
#include "qforms/errors.hpp"
#include "qforms/forms.hpp"

using namespace qforms;

namespace {

long ipow(long b, long e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// K(n) = E(n)/(v_0, ..., v_{n-1}) with coefficients F_p[v_n^{+-1}].
PresentationPtr morava_k(int p, int n) {
  RingDescription d;
  d.base = BaseRing::finite_field(make_field(p, 1));
  d.generators = {{"v" + std::to_string(n), static_cast<int>(2 * (ipow(p, n) - 1)), true}};
  std::vector<SequenceGenerator> seq;
  for (int i = 0; i < n; ++i) seq.push_back({"v" + std::to_string(i), static_cast<int>(2 * (ipow(p, i) - 1))});
  return make_quotient("K(n)", nullptr, seq, make_graded_ring(d));
}

// K_n with coefficients F_{p^n}[u^{+-1}], |u| = 2, sequence of n degree-0 classes.
PresentationPtr lubin_tate_k(int p, int n) {
  RingDescription d;
  d.base = BaseRing::finite_field(make_field(p, n));
  d.generators = {{"u", 2, true}};
  std::vector<SequenceGenerator> seq;
  for (int i = 0; i < n; ++i) seq.push_back({"u" + std::to_string(i), 0});
  return make_quotient("K_n", nullptr, seq, make_graded_ring(d));
}

PresentationPtr mu_j2() {
  RingDescription d;
  d.base = BaseRing::finite_field(make_field(2, 1));
  d.generators = {{"x2", 4, false}, {"x3", 6, false}, {"x4", 8, false}, {"x5", 10, false}};
  d.infinite_tail = true;
  d.truncation = Truncation{4, 10};
  return make_quotient("MU/J2", nullptr, {{"w0", 0}, {"w1", 2}}, make_graded_ring(d));
}

ModulePtr ungraded(int p, int n, std::size_t m) {
  RingDescription d;
  d.base = BaseRing::finite_field(make_field(p, n));
  return make_module(make_graded_ring(d), std::vector<std::string>(m, "x"), std::vector<int>(m, 0));
}

RingElement el(const BilinearForm& b, const std::string& s) { return RingElement::parse(b.coefficients(), s); }

bool is_unit_det(const Matrix& p, const RingPtr& r) { return determinant(p, r).is_unit(); }

}  // namespace

TEST_CASE("make_quotient examples and errors") {
  auto k = morava_k(2, 3);
  CHECK(k->size() == 3);
  CHECK(k->basis_degree(2) == 7);
  auto kn = lubin_tate_k(3, 2);
  CHECK(kn->basis_degree(0) == 1);
  auto mu = mu_j2();
  CHECK(mu->basis_degree(1) == 3);

  RingDescription d;
  d.base = BaseRing::finite_field(make_field(2, 1));
  d.generators = {{"v1", 2, true}};
  try {
    make_quotient("bad", nullptr, {{"v1", 2}}, make_graded_ring(d));
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInconsistentCoefficients);
  }
  try {
    make_quotient("bad", nullptr, {{"w", 3}}, make_graded_ring(d));
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOddSequenceDegree);
  }
}

TEST_CASE("bil_space for K(n) and K_n") {
  for (int p : {3, 5})
    for (int n = 1; n <= 3; ++n) {
      auto s = bil_space(*morava_k(p, n));
      CHECK(s.finite);
      CHECK(s.cardinality.value() == 1);
    }
  for (int n = 1; n <= 4; ++n) {
    auto s = bil_space(*morava_k(2, n));
    CHECK(s.cardinality.value() == 2);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK(s.slices[i][j].monomials.size() == ((i == n - 1 && j == n - 1) ? 1u : 0u));
  }
  auto s = bil_space(*lubin_tate_k(3, 2));
  CHECK(s.cardinality.symbolic() == "9^4");
  CHECK(bil_space(*mu_j2()).cardinality.value() == 8);
}

TEST_CASE("transpose and classify_form") {
  auto k = morava_k(2, 2);
  BilinearForm b(k->module());
  b.set(1, 1, el(b, "v2"));
  CHECK(transpose(b) == b);
  FormClass c = classify_form(b);
  CHECK(c.symmetric);
  CHECK(c.antisymmetric);
  CHECK_FALSE(c.alternating);
  CHECK_THROWS_AS(b.set(0, 1, el(b, "v2")), Error);

  FormClass z = classify_form(BilinearForm(k->module()));
  CHECK((z.symmetric && z.antisymmetric && z.alternating));

  auto f2 = ungraded(2, 1, 2);
  BilinearForm h(f2);
  h.set(0, 1, RingElement::one(f2->coefficients));
  h.set(1, 0, RingElement::one(f2->coefficients));
  FormClass hc = classify_form(h);
  CHECK((hc.symmetric && hc.antisymmetric && hc.alternating));

  auto mu = mu_j2();
  BilinearForm u(mu->module());
  u.set(0, 1, el(u, "x2"));
  BilinearForm ut(mu->module());
  ut.set(1, 0, el(u, "x2"));
  CHECK(transpose(u) == ut);
  CHECK(transpose(transpose(u)) == u);
}

TEST_CASE("chi and quad_lift") {
  auto kn = lubin_tate_k(3, 2);
  auto space = bil_space(kn->module());
  std::set<std::string> images;
  long alt = 0;
  long total = 0;
  for_each_form(space, [&](const BilinearForm& b) {
    ++total;
    QuadraticForm q = chi(b);
    if (classify_form(b).alternating) {
      ++alt;
      CHECK(q.is_zero());
    } else {
      CHECK_FALSE(q.is_zero());
    }
    CHECK(chi(quad_lift(q)) == q);
    images.insert(q.to_string());
    return true;
  });
  CHECK(total == 6561);
  CHECK(alt == 9);
  CHECK(static_cast<long>(images.size()) * alt == total);
}

TEST_CASE("quad_lift then chi over F_9 agrees with direct evaluation") {
  auto kn = lubin_tate_k(3, 2);
  const RingPtr r = kn->coefficients();
  QuadraticForm q(kn->module());
  q.set_diag(0, RingElement::parse(r, "{1,2}*u"));
  q.set_diag(1, RingElement::parse(r, "2*u"));
  q.set_polar(0, 1, RingElement::parse(r, "{0,1}*u"));
  BilinearForm b = quad_lift(q);
  CHECK(b(1, 0).is_zero());
  // beta(v, v) computed from the matrix, independently of chi
  for (const Scalar& s : r->base().elements())
    for (const Scalar& t : r->base().elements()) {
      std::vector<RingElement> c = {RingElement::constant(r, s), RingElement::constant(r, t)};
      RingElement direct = RingElement::zero(r);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) direct += c[i] * c[j] * b(i, j);
      CHECK(chi(b).evaluate(c) == direct);
      CHECK(q.evaluate(c) == direct);
    }
}

TEST_CASE("Sym, Alt, Asym on 2-torsion-free instances") {
  for (auto [p, n] : {std::pair{3, 1}, std::pair{3, 2}}) {
    auto kn = lubin_tate_k(p, n);
    auto space = bil_space(kn->module());
    const RingElement half = RingElement::constant(kn->coefficients(), kn->coefficients()->base().inv(
                                                                          kn->coefficients()->base().from_int(2)));
    for_each_form(space, [&](const BilinearForm& b) {
      FormClass c = classify_form(b);
      if (c.symmetric && c.alternating) CHECK(b.is_zero());
      CHECK(c.antisymmetric == c.alternating);
      BilinearForm sym = (b + transpose(b)).scaled(half);
      BilinearForm alt = (b - transpose(b)).scaled(half);
      CHECK(classify_form(sym).symmetric);
      CHECK(classify_form(alt).alternating);
      CHECK(sym + alt == b);
      return true;
    });
  }
}

TEST_CASE("pull back and base change") {
  auto mu = mu_j2();
  BilinearForm b(mu->module());
  b.set(0, 1, el(b, "x2"));
  b.set(1, 0, el(b, "x2"));
  b.set(1, 1, el(b, "x3"));
  CHECK(pull_back(b, identity_map(mu->module())) == b);
  ModuleMap bad = identity_map(mu->module());
  bad.matrix[0][1] = el(b, "x2");
  CHECK_THROWS_AS(pull_back(b, bad), Error);
  RingMap id = RingMap::by_names(mu->coefficients(), mu->coefficients());
  CHECK(base_change(id, b) == b);
}

TEST_CASE("MU/J2 forms under graded congruence search") {
  auto mu = mu_j2();
  BilinearForm bbar(mu->module());
  bbar.set(0, 1, el(bbar, "x2"));
  bbar.set(1, 0, el(bbar, "x2"));
  bbar.set(1, 1, el(bbar, "x3"));
  CHECK(degree_obstruction_2x2(bbar));
  DiagonalizeOptions opts;
  opts.mode = DiagonalizeMode::kGradedSearch;
  auto r = congruence_diagonalize(bbar, opts);
  CHECK(r.status == DiagStatus::kExhaustedNoWitness);
  CHECK(r.candidates == 4);

  BilinearForm base(mu->module());
  base.set(1, 1, el(base, "x3"));
  auto d = congruence_diagonalize(base, opts);
  CHECK(d.status == DiagStatus::kDiagonalized);
  CHECK(*d.change_of_basis == identity_matrix(mu->coefficients(), 2));
}

TEST_CASE("hyperbolic plane over F_3 diagonalizes; GL_2(F_3) oracle") {
  auto m = ungraded(3, 1, 2);
  const RingPtr r = m->coefficients;
  BilinearForm h(m);
  h.set(0, 1, RingElement::one(r));
  h.set(1, 0, RingElement::one(r));
  auto res = congruence_diagonalize(h);
  REQUIRE(res.status == DiagStatus::kDiagonalized);
  CHECK(res.diagonal->is_diagonal());
  CHECK(is_unit_det(*res.change_of_basis, r));

  int invertible = 0;
  int diagonalizing = 0;
  const auto elems = r->base().elements();
  for (const Scalar& a : elems)
    for (const Scalar& b : elems)
      for (const Scalar& c : elems)
        for (const Scalar& d : elems) {
          Matrix p = {{RingElement::constant(r, a), RingElement::constant(r, b)},
                      {RingElement::constant(r, c), RingElement::constant(r, d)}};
          if (!is_unit_det(p, r)) continue;
          ++invertible;
          Matrix g = matrix_multiply(matrix_multiply(matrix_transpose(p), h.matrix()), p);
          if (g[0][1].is_zero()) ++diagonalizing;
        }
  CHECK(invertible == 48);
  CHECK(diagonalizing > 0);
  DiagonalizeOptions opts;
  opts.mode = DiagonalizeMode::kGradedSearch;
  CHECK(congruence_diagonalize(h, opts).status == DiagStatus::kDiagonalized);
}

TEST_CASE("characteristic 2 trichotomy on K_n (p = 2, n = 2)") {
  auto kn = lubin_tate_k(2, 2);
  auto space = bil_space(kn->module());
  long checked = 0;
  for_each_form(space, [&](const BilinearForm& b) {
    FormClass c = classify_form(b);
    if (!c.symmetric) return true;
    ++checked;
    auto r = congruence_diagonalize(b);
    if (b.is_zero() || !c.alternating) {
      CHECK(r.status == DiagStatus::kDiagonalized);
      if (r.status == DiagStatus::kDiagonalized) {
        CHECK(r.diagonal->is_diagonal());
        CHECK(is_unit_det(*r.change_of_basis, kn->coefficients()));
      }
    } else {
      CHECK(r.status == DiagStatus::kNotDiagonalizable);
    }
    return true;
  });
  CHECK(checked == 64);
}

TEST_CASE("diagonalization over K_n at odd p and over F_5") {
  for (auto [p, n] : {std::pair{3, 2}, std::pair{5, 1}}) {
    auto kn = lubin_tate_k(p, n);
    auto space = bil_space(kn->module());
    long count = 0;
    for_each_form(space, [&](const BilinearForm& b) {
      if (!classify_form(b).symmetric) return true;
      auto r = congruence_diagonalize(b);
      CHECK(r.status == DiagStatus::kDiagonalized);
      CHECK(r.diagonal->is_diagonal());
      return ++count < 500;
    });
  }
  BilinearForm nonsym(lubin_tate_k(3, 2)->module());
  nonsym.set(0, 1, RingElement::parse(nonsym.coefficients(), "u"));
  CHECK_THROWS_AS(congruence_diagonalize(nonsym), Error);
}
