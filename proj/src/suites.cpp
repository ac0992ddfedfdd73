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

#include "qforms/suites.hpp"

#include <cmath>
#include <set>

#include "qforms/errors.hpp"

namespace qforms {

namespace {

void add(ReproReport& r, std::string name, std::string expected, std::string computed, bool pass) {
  r.checks.push_back({std::move(name), std::move(expected), std::move(computed), pass});
}

// Tally of a property over many trials.
struct Tally {
  int ok = 0;
  int total = 0;
  void operator()(bool b) {
    ok += b ? 1 : 0;
    ++total;
  }
  void report(ReproReport& r, const std::string& name) const {
    add(r, name, std::to_string(total) + "/" + std::to_string(total), std::to_string(ok) + "/" + std::to_string(total),
        ok == total && total > 0);
  }
};

std::string n_text(int n) { return "n=" + std::to_string(n); }

std::vector<CatalogEntry> enumerable_instances() {
  return {get("K_n", {2, 2, std::nullopt}), get("K_n", {3, 2, std::nullopt}), get("K(n)", {2, 2, std::nullopt}),
          get("K_n", {5, 1, std::nullopt})};
}

}  // namespace

PresentationPtr toy_presentation(int p) {
  RingDescription d;
  d.base = BaseRing::finite_field(make_field(p, 1));
  d.generators = {{"u", 2, true}};
  return make_quotient("toy", nullptr, {{"x0", 0}, {"x1", 0}}, make_graded_ring(d));
}

BilinearForm random_form(const ModulePtr& module, std::mt19937& rng) {
  const SpaceDescription s = bil_space(module);
  BilinearForm b(module);
  for (std::size_t i = 0; i < module->size(); ++i)
    for (std::size_t j = 0; j < module->size(); ++j) {
      const std::vector<RingElement> elems = s.slices[i][j].elements();
      std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
      b.set(i, j, elems[pick(rng)]);
    }
  return b;
}

BilinearForm random_alternating(const ModulePtr& module, std::mt19937& rng) {
  const BilinearForm r = random_form(module, rng);
  BilinearForm b(module);
  for (std::size_t i = 0; i < module->size(); ++i)
    for (std::size_t j = i + 1; j < module->size(); ++j) {
      b.set(i, j, r(i, j));
      b.set(j, i, -r(i, j));
    }
  return b;
}

std::vector<ProductTensor> unital_tensors(const PresentationPtr& owner, const BasePtr& base, int max_length) {
  ProductTensor probe(owner, base);
  std::vector<IndexPair> keys;
  std::vector<std::vector<RingElement>> values;
  const std::uint32_t limit = 1u << owner->size();
  for (std::uint32_t a = 1; a < limit; ++a)
    for (std::uint32_t b = 1; b < limit; ++b) {
      const MultiIndex i(a), j(b);
      if (i.length() > max_length || j.length() > max_length) continue;
      const Slice s = homogeneous_slice(owner->coefficients(), probe.weight(i) + probe.weight(j));
      if (!s.finite) throw Error(ErrorCode::kInvalidArgument, "tensor coefficients are not enumerable");
      std::vector<RingElement> elems = s.elements();
      if (elems.size() < 2) continue;
      keys.push_back({i, j});
      values.push_back(std::move(elems));
    }
  std::vector<ProductTensor> out;
  std::vector<std::size_t> digit(keys.size(), 0);
  while (true) {
    ProductTensor::TermMap terms;
    for (std::size_t k = 0; k < keys.size(); ++k)
      if (!values[k][digit[k]].is_zero()) terms.emplace(keys[k], values[k][digit[k]]);
    out.push_back(ProductTensor::from_terms(owner, base, terms));
    std::size_t k = 0;
    while (k < keys.size() && ++digit[k] == values[k].size()) digit[k++] = 0;
    if (k == keys.size()) break;
  }
  return out;
}

ReproReport suite_identities() {
  ReproReport r{"identities", {}};
  for (int n = 1; n <= 4; ++n) {
    const IdentityCheck c = check_product_identity(n, [](int k) { return k % 2 ? 1L : -1L; });
    add(r, "product identity, alternating signs, " + n_text(n), "1 + sum a_k",
        c.holds ? "1 + sum a_k" : "residual " + c.residual, c.holds);
  }
  for (int n = 1; n <= 6; ++n) {
    const bool holds = product_identity_log(n);
    add(r, "product identity, coefficients (-1)^(k-1) (k-1)!, " + n_text(n), "1 + sum a_k",
        holds ? "1 + sum a_k" : "mismatch", holds);
  }

  Tally anti, square;
  for (const CatalogEntry& e : {get("K_n", {3, 3, std::nullopt}), get("K(n)", {2, 3, std::nullopt})}) {
    const RingPtr ring = e.presentation->coefficients();
    const RingElement one = RingElement::one(ring);
    const int m = static_cast<int>(e.presentation->size());
    for (int i = 0; i < m; ++i) {
      const EndoElement qi = EndoElement::term(ring, MultiIndex::single(i), MultiIndex(), one);
      square((qi * qi).terms().empty());
      for (int j = 0; j < m; ++j) {
        const EndoElement qj = EndoElement::term(ring, MultiIndex::single(j), MultiIndex(), one);
        anti((qi * qj + qj * qi).terms().empty());
        const EndoElement li = EndoElement::term(ring, MultiIndex::single(i), MultiIndex::single(j), one);
        square((li * li).terms().empty());
      }
    }
  }
  anti.report(r, "Q_i Q_j + Q_j Q_i = 0");
  square.report(r, "Q_i^2 = 0 and (Q_i (x) Q_j)^2 = 0");

  std::mt19937 rng(21);
  Tally c1, c2, c3;
  for (const CatalogEntry& e : enumerable_instances()) {
    const ProductTensor mu = e.base_tensor();
    const RingPtr ring = e.presentation->coefficients();
    for (int trial = 0; trial < 20; ++trial) {
      const BilinearForm beta = random_form(e.presentation->module(), rng);
      const ProductTensor t = act(beta, mu);
      const LambdaElement unit = LambdaElement::basis(ring, MultiIndex());
      for (std::uint32_t s = 0; s < (1u << e.presentation->size()); ++s) {
        const LambdaElement x = LambdaElement::basis(ring, MultiIndex(s), RingElement::from_int(ring, 2));
        c1(lambda_multiply(t, unit, x) == x && lambda_multiply(t, x, unit) == x);
      }
      const BilinearForm b = characteristic_form(t);
      c2(model_characteristic_form(t) == b && b == e.base->b_base - (beta + transpose(beta)));
      c3(classify_form(b).symmetric);
    }
  }
  c1.report(r, "unit law in the Lambda model");
  c2.report(r, "Lambda-model form = b_base - (beta + beta^t)");
  c3.report(r, "characteristic forms of random products are symmetric");
  return r;
}

ReproReport suite_orbit_oracle() {
  ReproReport r{"orbit-oracle", {}};
  for (int p : {2, 3}) {
    const PresentationPtr f = toy_presentation(p);
    const BasePtr base = make_base("mu", BilinearForm(f->module()));
    std::set<ProductTensor> associative, orbit;
    std::size_t candidates = 0;
    for (const ProductTensor& t : unital_tensors(f, base, 2)) {
      ++candidates;
      if (is_associative(t)) associative.insert(t);
    }
    for_each_form(bil_space(f->module()), [&](const BilinearForm& b) {
      orbit.insert(expand_action(b, f, base));
      return true;
    });
    const std::string tag = "toy over F_" + std::to_string(p) + ": ";
    add(r, tag + "unital tensors enumerated", std::to_string(static_cast<long>(std::pow(p, 5))),
        std::to_string(candidates), candidates == static_cast<std::size_t>(std::pow(p, 5)));
    add(r, tag + "orbit size", std::to_string(static_cast<long>(std::pow(p, 4))), std::to_string(orbit.size()),
        orbit.size() == static_cast<std::size_t>(std::pow(p, 4)));
    add(r, tag + "associative tensors = orbit", std::to_string(orbit.size()), std::to_string(associative.size()),
        associative == orbit);
  }

  for (const PresentationPtr& f : {toy_presentation(2), get("K_n", {2, 2, std::nullopt}).presentation}) {
    const BasePtr base = make_base("mu", BilinearForm(f->module()));
    const ProductTensor mu(f, base);
    std::set<BilinearForm> image, alt;
    for_each_form(bil_space(f->module()), [&](const BilinearForm& b) {
      image.insert(model_characteristic_form(act(b, mu)));
      if (classify_form(b).alternating) alt.insert(b);
      return true;
    });
    add(r, f->name() + " over F_2: characteristic forms of the orbit = Alt", std::to_string(alt.size()) + " forms",
        std::to_string(image.size()) + " forms", image == alt);
  }
  return r;
}

ReproReport suite_transforms(int trials, unsigned seed) {
  ReproReport r{"transforms", {}};
  std::mt19937 rng(seed);
  const std::vector<CatalogEntry> instances = enumerable_instances();
  Tally rule, model, symmetric, involution, flip, chain, op_rule, law;
  for (int trial = 0; trial < trials; ++trial) {
    const CatalogEntry& e = instances[trial % instances.size()];
    const ModulePtr& v = e.presentation->module();
    const BilinearForm b0 = random_form(v, rng);
    const BilinearForm beta = random_form(v, rng);
    const ProductTensor t = act(b0, e.base_tensor());
    const ProductTensor moved = act(beta, t);
    const BilinearForm bt = characteristic_form(t);
    const BilinearForm b = characteristic_form(moved);
    rule(b == bt - (beta + transpose(beta)));
    model(model_characteristic_form(moved) == b);
    symmetric(classify_form(b).symmetric);
    involution(opposite(opposite(moved)) == moved);
    flip(characteristic_form(opposite(moved)) == -b);
    const BilinearForm left = relative_transform({RelativeRuleKind::kTwistLeft, beta, std::nullopt, std::nullopt}, bt);
    const BilinearForm right =
        relative_transform({RelativeRuleKind::kTwistRight, beta, std::nullopt, std::nullopt}, left);
    chain(left == bt - beta && right == b);
    op_rule(relative_transform({RelativeRuleKind::kOpPair, std::nullopt, std::nullopt, std::nullopt}, b) ==
            characteristic_form(opposite(moved)));
    law(act(beta, act(b0, e.base_tensor())) == act(b0 + beta, e.base_tensor()));
  }
  rule.report(r, "characteristic_form(act(beta, T)) = b_T - (beta + beta^t)");
  model.report(r, "Lambda-model form agrees");
  symmetric.report(r, "characteristic forms are symmetric");
  involution.report(r, "opposite is an involution");
  flip.report(r, "b(opposite T) = -b(T)");
  chain.report(r, "twist-left then twist-right reproduces the action rule");
  op_rule.report(r, "op-pair rule matches opposite");
  law.report(r, "act(beta, act(beta0, T)) = act(beta0 + beta, T)");
  return r;
}

ReproReport suite_equivalence(int trials, unsigned seed) {
  ReproReport r{"equivalence", {}};
  std::mt19937 rng(seed);
  const std::vector<CatalogEntry> instances = {get("K_n", {3, 2, std::nullopt}), get("K_n", {2, 3, std::nullopt}),
                                               get("K(n)", {2, 2, std::nullopt})};
  Tally theta_ok, inverse_ok;
  for (int trial = 0; trial < trials; ++trial) {
    const CatalogEntry& e = instances[trial % instances.size()];
    const BilinearForm alt = random_alternating(e.presentation->module(), rng);
    const ProductTensor t = act(random_form(e.presentation->module(), rng), e.base_tensor());
    const ProductTensor t2 = act(alt, t);
    theta_ok(verify_mult_equiv(theta(alt), t, t2));
    inverse_ok(verify_mult_equiv(theta_inverse(alt), t2, t));
  }
  theta_ok.report(r, "theta(beta) is a multiplicative equivalence for alternating beta");
  inverse_ok.report(r, "theta(beta)^-1 inverts it");

  const PresentationPtr f = toy_presentation(2);
  const ProductTensor mu(f, make_base("mu", BilinearForm(f->module())));
  const RingElement u = RingElement::parse(f->coefficients(), "u");
  BilinearForm sym(f->module());
  sym.set(0, 0, u);
  const WitnessSearch none = search_equivalence_witness(mu, act(sym, mu));
  add(r, "toy over F_2, beta = u at (0,0): exhaustive witness search", "no witness",
      (none.witness ? "witness found" : "no witness") + std::string(" among ") + std::to_string(none.candidates) +
          (none.exhaustive ? " (exhaustive)" : " (bound hit)"),
      !none.witness && none.exhaustive && none.candidates > 0);
  BilinearForm alt(f->module());
  alt.set(0, 1, u);
  alt.set(1, 0, u);
  const WitnessSearch some = search_equivalence_witness(mu, act(alt, mu));
  add(r, "toy over F_2, beta = u at (0,1) + (1,0): witness search", "witness", some.witness ? "witness" : "none",
      some.witness.has_value());
  return r;
}

ReproReport suite_catalog() {
  ReproReport r{"catalog", {}};
  for (ReproTarget target : repro_targets()) {
    const ReproReport part = reproduce(target);
    for (const ReproCheck& c : part.checks) r.checks.push_back({part.title + ": " + c.name, c.expected, c.computed, c.pass});
  }
  return r;
}

std::vector<std::string> suite_names() { return {"identities", "orbit-oracle", "transforms", "catalog"}; }

ReproReport run_suite(std::string_view name) {
  if (name == "identities") return suite_identities();
  if (name == "orbit-oracle") return suite_orbit_oracle();
  if (name == "transforms") {
    ReproReport r = suite_transforms();
    const ReproReport eq = suite_equivalence();
    r.checks.insert(r.checks.end(), eq.checks.begin(), eq.checks.end());
    return r;
  }
  if (name == "catalog") return suite_catalog();
  throw Error(ErrorCode::kInvalidArgument, "unknown suite '" + std::string(name) + "'");
}

}  // namespace qforms
