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

#include "qforms/classification.hpp"

#include <set>
#include <sstream>

#include "qforms/errors.hpp"

namespace qforms {

const char* const kFormulaReading =
    "product counts are cardinalities |Bil^0| = q^(number of entries), so 'p^n n^2' is read as (p^n)^(n^2) "
    "and 'p^n n(n+1)/2' as (p^n)^(n(n+1)/2)";

bool pairwise_non_equivalent(const std::vector<BilinearForm>& forms) {
  for (std::size_t a = 0; a < forms.size(); ++a)
    for (std::size_t b = a + 1; b < forms.size(); ++b)
      if (classify_form(forms[a] - forms[b]).alternating) return false;
  return true;
}

std::optional<WitnessFamily> multiples_family(const QuotientPresentation& f) {
  const RingPtr& ring = f.coefficients();
  if (ring->base().cardinality()) return std::nullopt;
  const SpaceDescription space = bil_space(f.module());
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j) {
      const Slice& s = space.slices[i][j];
      if (s.finite || s.monomials.empty()) continue;
      const RingElement m = RingElement::monomial(ring, s.monomials.front(), ring->base().one());
      WitnessFamily fam;
      std::ostringstream d;
      d << "beta_c = c * " << m.to_string() << " at entry (" << i << "," << j << "), c = 1, 2, ...";
      fam.description = d.str();
      for (long c = 1; c <= 3; ++c) {
        const RingElement x = m * RingElement::from_int(ring, c);
        fam.members.push_back(BilinearForm::from_entries(f.module(), {{i, j, x}}));
        fam.sample.push_back(x.to_string() + " at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      return fam;
    }
  return std::nullopt;
}

ProductEnumeration enumerate_products(const ProductTensor& base, const std::optional<WitnessFamily>& family) {
  const QuotientPresentation& f = *base.owner();
  const SpaceDescription space = bil_space(f);
  ProductEnumeration out;
  if (!space.finite) {
    out.infinite = true;
    out.family = family ? family : multiples_family(f);
    return out;
  }
  for_each_form(space, [&](const BilinearForm& beta) {
    out.products.push_back(act(beta, base));
    return true;
  });
  return out;
}

namespace {

bool two_is_unit(const BaseRing& base) {
  return base.characteristic() != 2 && !(base.characteristic() == 0 && base.prime() == 2);
}

// x with 2x = y, coefficientwise in Z_(2); nullopt when some coefficient is odd.
std::optional<RingElement> halve_2_local(const RingElement& y) {
  RingElement out = RingElement::zero(y.ring());
  for (const auto& [e, c] : y.terms()) {
    mpz_class num = c.rational().get_num();
    if (num % 2 != 0) return std::nullopt;
    mpq_class h = c.rational() / 2;
    h.canonicalize();
    out += RingElement::monomial(y.ring(), e, Scalar(h));
  }
  return out;
}

}  // namespace

CommutativeAnalysis commutative_analysis(const QuotientPresentation& f, const BilinearForm& b_base) {
  CommutativeAnalysis out;
  if (!classify_form(b_base).symmetric) {
    out.exists = false;
    out.method = "b_base is not symmetric, while beta + beta^t always is";
    return out;
  }
  const RingPtr& ring = f.coefficients();
  const BaseRing& base = ring->base();
  if (two_is_unit(base)) {
    out.exists = true;
    out.witness = b_base.scaled(RingElement::constant(ring, base.inv(base.from_int(2))));
    out.method = "2 is invertible: beta = b_base / 2";
    return out;
  }
  BilinearForm w(f.module());
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) w.set(i, j, b_base(i, j));
  for (std::size_t i = 0; i < f.size(); ++i) {
    const RingElement& d = b_base(i, i);
    if (d.is_zero()) continue;
    std::optional<RingElement> half;
    if (base.characteristic() == 0) half = halve_2_local(d);
    if (!half) {
      out.exists = false;
      out.method = base.characteristic() == 2 ? "characteristic 2 and b_base is not alternating"
                                              : "diagonal entry " + std::to_string(i) + " of b_base is not divisible by 2";
      return out;
    }
    w.set(i, i, *half);
  }
  out.exists = true;
  out.witness = w;
  out.method = base.characteristic() == 2 ? "b_base alternating: strictly lower triangular half"
                                          : "lower triangular half with halved diagonal";
  return out;
}

EnumeratedCensus enumerate_census(const ProductTensor& base) {
  const SpaceDescription space = bil_space(base.owner()->module());
  std::vector<BilinearForm> forms;
  std::vector<BilinearForm> alts;
  EnumeratedCensus out;
  std::set<ProductTensor> products;
  std::vector<BilinearForm> commutative;
  for_each_form(space, [&](const BilinearForm& beta) {
    forms.push_back(beta);
    const FormClass c = classify_form(beta);
    if (c.alternating) alts.push_back(beta);
    if (c.antisymmetric) ++out.asym;
    const ProductTensor t = act(beta, base);
    products.insert(t);
    if (model_characteristic_form(t).is_zero()) commutative.push_back(beta);
    return true;
  });
  out.bil = forms.size();
  out.alt = alts.size();
  out.products = products.size();
  out.commutative = commutative.size();
  auto count_cosets = [&](const std::vector<BilinearForm>& set) {
    std::set<BilinearForm> seen;
    std::uint64_t n = 0;
    for (const BilinearForm& b : set) {
      if (seen.count(b)) continue;
      ++n;
      for (const BilinearForm& a : alts) seen.insert(b + a);
    }
    return n;
  };
  out.classes = count_cosets(forms);
  out.commutative_classes = count_cosets(commutative);
  return out;
}

CensusReport census(const ProductTensor& base, const CensusOptions& options,
                    const std::optional<WitnessFamily>& family) {
  const QuotientPresentation& f = *base.owner();
  const BaseRing& ring_base = f.coefficients()->base();
  const SpaceDescription space = bil_space(f.module());
  const std::size_t m = f.size();

  CensusReport r;
  r.instance = f.name();
  r.two_invertible = two_is_unit(ring_base);
  r.two_torsion_free = ring_base.characteristic() != 2;
  r.window_only = options.window_only && f.infinite_tail();
  const bool tail = f.infinite_tail() && !options.window_only;
  const Count beyond = Count::infinite("the regular sequence continues beyond the window");

  Count diag = Count::finite(1);
  Count upper = Count::finite(1);
  Count lower = Count::finite(1);
  Count torsion = Count::finite(1);
  for (std::size_t i = 0; i < m; ++i) {
    diag = diag * space.slices[i][i].cardinality();
    if (ring_base.characteristic() == 2) torsion = torsion * space.slices[i][i].cardinality();
    for (std::size_t j = i + 1; j < m; ++j) {
      upper = upper * space.slices[i][j].cardinality();
      lower = lower * space.slices[j][i].cardinality();
    }
  }
  if (tail) {
    diag = diag * beyond;
    upper = upper * beyond;
    lower = lower * beyond;
    if (ring_base.characteristic() == 2) torsion = torsion * beyond;
  }
  r.bil = diag * upper * lower;
  r.alt = upper;
  r.asym = upper * torsion;
  r.products = r.bil;
  r.classes = diag * upper;

  const CommutativeAnalysis ca = commutative_analysis(f, base.base()->b_base);
  r.has_commutative = ca.exists;
  if (ca.exists.value_or(false)) {
    r.commutative_witness = ca.witness;
    r.commutative = r.asym;
    r.commutative_classes = torsion;
  }
  r.notes.push_back(std::string("formula reading: ") + kFormulaReading);
  r.notes.push_back("commutative products: " + ca.method);
  if (r.window_only) r.notes.push_back("counts refer to the presentation window only");

  if (r.products.is_infinite()) {
    r.family = family ? family : multiples_family(f);
    if (!r.family && tail) {
      WitnessFamily fam;
      fam.description = "forms supported on sequence generators beyond the window";
      r.family = fam;
    }
  } else if (r.products.value() <= options.cross_check_bound) {
    const EnumeratedCensus e = enumerate_census(base);
    auto eq = [](const Count& c, std::uint64_t v) { return !c.is_infinite() && c.value() == v; };
    r.cross_checked = eq(r.bil, e.bil) && eq(r.alt, e.alt) && eq(r.asym, e.asym) && eq(r.products, e.products) &&
                      eq(r.classes, e.classes) && eq(r.commutative, e.commutative) &&
                      eq(r.commutative_classes, e.commutative_classes);
  }
  return r;
}

EquivalenceResult equivalence(const ProductTensor& t1, const ProductTensor& t2) {
  const BasePtr& a = t1.base();
  const BasePtr& b = t2.base();
  const bool same = a == b || (a->name == b->name && a->b_base.module()->same_as(*b->b_base.module()) &&
                               a->b_base == b->b_base);
  if (!same) throw Error(ErrorCode::kDifferentBase, "tensors are written against " + a->name + " and " + b->name);
  EquivalenceResult r{false, factorize(t2) - factorize(t1), std::nullopt, false};
  r.equivalent = classify_form(r.difference).alternating;
  if (r.equivalent) {
    r.witness = theta(r.difference);
    r.witness_verified = verify_mult_equiv(*r.witness, t1, t2);
  }
  return r;
}

const char* diag_verdict_name(DiagVerdict v) {
  switch (v) {
    case DiagVerdict::kDiagonalizable: return "Diagonalizable";
    case DiagVerdict::kNotDiagonalizable: return "NotDiagonalizable";
    case DiagVerdict::kUnknown: return "Unknown";
  }
  return "Unknown";
}

DiagonalizabilityResult diagonalizability(const ProductTensor& t, std::uint64_t search_bound) {
  DiagonalizabilityResult r{DiagVerdict::kUnknown, characteristic_form(t), std::nullopt, false, 0, {}};
  const RingPtr& ring = t.coefficients();
  DiagonalizeOptions opt;
  opt.search_bound = search_bound;
  opt.mode = ring->is_graded_field() ? DiagonalizeMode::kField : DiagonalizeMode::kGradedSearch;
  r.degree_obstruction = degree_obstruction_2x2(r.characteristic);
  const DiagonalizationResult d = congruence_diagonalize(r.characteristic, opt);
  r.candidates = d.candidates;
  r.reason = d.reason;
  switch (d.status) {
    case DiagStatus::kDiagonalized:
      r.verdict = DiagVerdict::kDiagonalizable;
      r.change_of_basis = d.change_of_basis;
      break;
    case DiagStatus::kNotDiagonalizable:
      r.verdict = DiagVerdict::kNotDiagonalizable;
      break;
    case DiagStatus::kExhaustedNoWitness:
    case DiagStatus::kUnknown:
      if (r.degree_obstruction) {
        r.verdict = DiagVerdict::kNotDiagonalizable;
        r.reason = "degree argument: the off-diagonal entry cannot be cleared since no element has the "
                   "required degree; " + d.reason;
      }
      break;
  }
  return r;
}

void check_map_data(const MapData& m) {
  check_module_map(m.pi);
  const auto& v = *m.source->module();
  const auto& w = *m.target->module();
  if (m.pi.source->degrees != v.degrees || m.pi.target->degrees != w.degrees) {
    throw Error(ErrorCode::kDegreeMismatch, "module map does not connect the presentations' modules");
  }
  if (m.k.source() != m.source->coefficients() || m.k.target() != m.target->coefficients()) {
    throw Error(ErrorCode::kInconsistentCoefficients, "coefficient map does not go from F_* to G_*");
  }
  if (m.b_source.module()->degrees != v.degrees || m.b_target.module()->degrees != w.degrees ||
      m.b_relative.module()->degrees != v.degrees) {
    throw Error(ErrorCode::kDegreeMismatch, "forms do not live on the expected modules");
  }
  if (m.b_relative.coefficients() != m.target->coefficients()) {
    throw Error(ErrorCode::kInconsistentCoefficients, "relative form must have coefficients in G_*");
  }
}

SmoothnessResult smoothness(const MapData& m) {
  check_map_data(m);
  const RingPtr& ring = m.target->coefficients();
  SmoothnessResult r;
  const bool exact = ring->is_graded_field();
  if (!exact) r.caveat = "residue-field check only";
  const RingMap res = residue_map(ring);
  const BaseRing field = res.target()->base();
  const std::size_t rows = m.pi.matrix.size();
  const std::size_t cols = m.source->size();
  std::vector<std::vector<Scalar>> a(rows, std::vector<Scalar>(cols, field.zero()));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      const RingElement x = res.apply(m.pi.matrix[i][k]);
      a[i][k] = x.is_zero() ? field.zero() : *x.as_constant();
    }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && field.is_zero(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    const Scalar inv = field.inv(a[rank][c]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || field.is_zero(a[i][c])) continue;
      const Scalar f = field.mul(a[i][c], inv);
      for (std::size_t k = c; k < cols; ++k) a[i][k] = field.sub(a[i][k], field.mul(f, a[rank][k]));
    }
    ++rank;
  }
  r.rank = rank;
  r.smooth = rank == cols;
  return r;
}

MultiplicativityResult map_multiplicativity(const MapData& m, const std::optional<BilinearForm>& beta,
                                            const std::optional<BilinearForm>& gamma) {
  const SmoothnessResult s = smoothness(m);
  if (!s.smooth) {
    throw Error(ErrorCode::kNotSmooth, "induced map on I/I^2[1] has rank " + std::to_string(s.rank) + " < " +
                                           std::to_string(m.source->size()));
  }
  BilinearForm bf = m.b_source;
  BilinearForm bg = m.b_target;
  BilinearForm rel = m.b_relative;
  if (beta) {
    bf = bf - (*beta + transpose(*beta));
    RelativeRule left{RelativeRuleKind::kTwistLeft, *beta, m.k, std::nullopt};
    rel = relative_transform(left, rel);
  }
  if (gamma) {
    bg = bg - (*gamma + transpose(*gamma));
    RelativeRule right{RelativeRuleKind::kTwistRight, *gamma, std::nullopt, m.pi};
    rel = relative_transform(right, rel);
  }
  MultiplicativityResult r{s, false, base_change(m.k, bf), rel, pull_back(bg, m.pi)};
  r.multiplicative = r.base_changed == r.relative && r.relative == r.pulled_back;
  return r;
}

}  // namespace qforms
