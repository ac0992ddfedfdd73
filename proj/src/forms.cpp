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

#include "qforms/forms.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "qforms/errors.hpp"

namespace qforms {

bool FormModule::same_as(const FormModule& other) const {
  if (this == &other) return true;
  if (names != other.names || degrees != other.degrees) return false;
  if (coefficients == other.coefficients) return true;
  return coefficients->description() == other.coefficients->description();
}

ModulePtr make_module(RingPtr coefficients, std::vector<std::string> names, std::vector<int> degrees) {
  if (names.size() != degrees.size()) throw Error(ErrorCode::kInvalidArgument, "names/degrees size mismatch");
  auto m = std::make_shared<FormModule>();
  m->coefficients = std::move(coefficients);
  m->names = std::move(names);
  m->degrees = std::move(degrees);
  return m;
}

PresentationPtr make_quotient(std::string name, RingPtr ambient, std::vector<SequenceGenerator> sequence,
                              RingPtr coefficients, bool infinite_tail) {
  if (sequence.empty()) throw Error(ErrorCode::kInvalidArgument, "the regular sequence must be nonempty");
  if (!coefficients) throw Error(ErrorCode::kInvalidArgument, "missing coefficient ring");
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (const SequenceGenerator& x : sequence) {
    if (x.degree % 2 != 0) {
      throw Error(ErrorCode::kOddSequenceDegree, x.name + " has odd degree " + std::to_string(x.degree));
    }
    if (coefficients->generator_index(x.name)) {
      throw Error(ErrorCode::kInconsistentCoefficients,
                  x.name + " lies in the ideal but is a generator of the coefficient ring");
    }
    if (std::find(names.begin(), names.end(), x.name) != names.end()) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate sequence generator " + x.name);
    }
    names.push_back(x.name);
    degrees.push_back(x.degree + 1);
  }
  if (ambient) {
    for (const GeneratorSpec& g : coefficients->generators()) {
      const auto k = ambient->generator_index(g.name);
      if (!k || ambient->generators()[*k].degree != g.degree) {
        throw Error(ErrorCode::kInconsistentCoefficients,
                    g.name + " is not a generator of the ambient ring of the same degree");
      }
    }
  }
  std::shared_ptr<QuotientPresentation> f(new QuotientPresentation());
  f->name_ = std::move(name);
  f->ambient_ = std::move(ambient);
  f->sequence_ = std::move(sequence);
  f->module_ = make_module(std::move(coefficients), std::move(names), std::move(degrees));
  f->infinite_tail_ = infinite_tail;
  return f;
}

// ---------------------------------------------------------------- matrices

Matrix identity_matrix(const RingPtr& ring, std::size_t m) {
  Matrix a(m, std::vector<RingElement>(m, RingElement::zero(ring)));
  for (std::size_t i = 0; i < m; ++i) a[i][i] = RingElement::one(ring);
  return a;
}

Matrix matrix_transpose(const Matrix& a) {
  if (a.empty()) return a;
  Matrix t(a[0].size(), std::vector<RingElement>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Matrix matrix_multiply(const Matrix& a, const Matrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b[0].size();
  Matrix c(a.size(), std::vector<RingElement>(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      RingElement s;
      for (std::size_t k = 0; k < inner; ++k) {
        if (!a[i][k].is_zero() && !b[k][j].is_zero()) s += a[i][k] * b[k][j];
      }
      c[i][j] = std::move(s);
    }
  }
  return c;
}

RingElement determinant(const Matrix& a, const RingPtr& ring) {
  const std::size_t m = a.size();
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  RingElement det = RingElement::zero(ring);
  do {
    RingElement term = RingElement::one(ring);
    for (std::size_t i = 0; i < m && !term.is_zero(); ++i) term = term * a[i][perm[i]];
    if (term.is_zero()) continue;
    int inversions = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (perm[i] > perm[j]) ++inversions;
    det += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// ---------------------------------------------------------------- BilinearForm

BilinearForm::BilinearForm(ModulePtr module) : module_(std::move(module)) {
  const std::size_t m = module_->size();
  entries_.assign(m, std::vector<RingElement>(m, RingElement::zero(module_->coefficients)));
}

BilinearForm BilinearForm::from_entries(
    ModulePtr module, const std::vector<std::tuple<std::size_t, std::size_t, RingElement>>& entries) {
  BilinearForm b(std::move(module));
  for (const auto& [i, j, x] : entries) b.set(i, j, b.entries_.at(i).at(j) + x);
  return b;
}

BilinearForm BilinearForm::from_matrix(ModulePtr module, const Matrix& entries) {
  BilinearForm b(std::move(module));
  if (entries.size() != b.size()) throw Error(ErrorCode::kInvalidArgument, "matrix has wrong size");
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (entries[i].size() != b.size()) throw Error(ErrorCode::kInvalidArgument, "matrix has wrong size");
    for (std::size_t j = 0; j < b.size(); ++j) b.set(i, j, entries[i][j]);
  }
  return b;
}

void BilinearForm::set(std::size_t i, std::size_t j, RingElement x) {
  if (i >= size() || j >= size()) throw Error(ErrorCode::kInvalidArgument, "form index out of range");
  if (!x.is_zero()) {
    const auto d = x.degree();
    if (!d || *d != entry_degree(i, j)) {
      throw Error(ErrorCode::kDegreeMismatch,
                  "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + x.to_string() +
                      " must be homogeneous of degree " + std::to_string(entry_degree(i, j)));
    }
  }
  if (x.is_zero()) x = RingElement::zero(coefficients());
  entries_[i][j] = std::move(x);
}

bool BilinearForm::is_zero() const {
  for (const auto& row : entries_)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

bool BilinearForm::is_diagonal() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (i != j && !entries_[i][j].is_zero()) return false;
  return true;
}

BilinearForm BilinearForm::operator+(const BilinearForm& other) const {
  if (!module_->same_as(*other.module_)) throw Error(ErrorCode::kInvalidArgument, "forms on different modules");
  BilinearForm out = *this;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) out.entries_[i][j] += other.entries_[i][j];
  return out;
}

BilinearForm BilinearForm::operator-() const {
  BilinearForm out = *this;
  for (auto& row : out.entries_)
    for (auto& x : row) x = -x;
  return out;
}

BilinearForm BilinearForm::operator-(const BilinearForm& other) const { return *this + (-other); }

BilinearForm BilinearForm::scaled(const RingElement& c) const {
  BilinearForm out(module_);
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) out.set(i, j, c * entries_[i][j]);
  return out;
}

bool BilinearForm::operator==(const BilinearForm& other) const {
  return size() == other.size() && entries_ == other.entries_;
}

bool BilinearForm::operator<(const BilinearForm& other) const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) {
      if (entries_[i][j] < other.entries_[i][j]) return true;
      if (other.entries_[i][j] < entries_[i][j]) return false;
    }
  return false;
}

std::string BilinearForm::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out << ", ";
    out << '[';
    for (std::size_t j = 0; j < size(); ++j) {
      if (j) out << ", ";
      out << entries_[i][j].to_string();
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

BilinearForm transpose(const BilinearForm& beta) {
  return BilinearForm::from_matrix(beta.module(), matrix_transpose(beta.matrix()));
}

FormClass classify_form(const BilinearForm& beta) {
  FormClass c;
  const BilinearForm t = transpose(beta);
  c.symmetric = (t == beta);
  c.antisymmetric = (t == -beta);
  c.alternating = c.antisymmetric;
  for (std::size_t i = 0; i < beta.size() && c.alternating; ++i) {
    if (!beta(i, i).is_zero()) c.alternating = false;
  }
  if (beta.coefficients()->base().characteristic() == 2 && c.alternating && !c.symmetric) {
    throw Error(ErrorCode::kInvalidArgument, "alternating form not symmetric in characteristic 2");
  }
  return c;
}

// ---------------------------------------------------------------- QuadraticForm

QuadraticForm::QuadraticForm(ModulePtr module) : module_(std::move(module)) {
  const std::size_t m = module_->size();
  diag_.assign(m, RingElement::zero(module_->coefficients));
  polar_.assign(m, std::vector<RingElement>(m, RingElement::zero(module_->coefficients)));
}

void QuadraticForm::set_diag(std::size_t i, RingElement x) {
  const int d = 2 * module_->degrees.at(i);
  if (!x.is_zero() && x.degree() != d) {
    throw Error(ErrorCode::kDegreeMismatch, "q(xbar_" + std::to_string(i) + ") must have degree " + std::to_string(d));
  }
  diag_[i] = std::move(x);
}

void QuadraticForm::set_polar(std::size_t i, std::size_t j, RingElement x) {
  if (i >= j || j >= module_->size()) throw Error(ErrorCode::kInvalidArgument, "polar index needs i < j");
  const int d = module_->degrees[i] + module_->degrees[j];
  if (!x.is_zero() && x.degree() != d) {
    throw Error(ErrorCode::kDegreeMismatch, "polar value must have degree " + std::to_string(d));
  }
  polar_[i][j] = std::move(x);
}

RingElement QuadraticForm::evaluate(const std::vector<RingElement>& c) const {
  RingElement out = RingElement::zero(module_->coefficients);
  for (std::size_t i = 0; i < module_->size(); ++i) {
    out += c[i] * c[i] * diag_[i];
    for (std::size_t j = i + 1; j < module_->size(); ++j) out += c[i] * c[j] * polar_[i][j];
  }
  return out;
}

bool QuadraticForm::is_zero() const {
  for (std::size_t i = 0; i < module_->size(); ++i) {
    if (!diag_[i].is_zero()) return false;
    for (std::size_t j = i + 1; j < module_->size(); ++j)
      if (!polar_[i][j].is_zero()) return false;
  }
  return true;
}

bool QuadraticForm::operator==(const QuadraticForm& other) const {
  if (diag_ != other.diag_) return false;
  for (std::size_t i = 0; i < module_->size(); ++i)
    for (std::size_t j = i + 1; j < module_->size(); ++j)
      if (polar_[i][j] != other.polar_[i][j]) return false;
  return true;
}

std::string QuadraticForm::to_string() const {
  std::ostringstream out;
  out << "q = {";
  for (std::size_t i = 0; i < module_->size(); ++i) {
    if (i) out << ", ";
    out << diag_[i].to_string();
  }
  out << "}, polar = {";
  bool first = true;
  for (std::size_t i = 0; i < module_->size(); ++i)
    for (std::size_t j = i + 1; j < module_->size(); ++j) {
      if (polar_[i][j].is_zero()) continue;
      if (!first) out << ", ";
      first = false;
      out << '(' << i << ',' << j << "): " << polar_[i][j].to_string();
    }
  out << '}';
  return out.str();
}

QuadraticForm chi(const BilinearForm& beta) {
  QuadraticForm q(beta.module());
  for (std::size_t i = 0; i < beta.size(); ++i) {
    q.set_diag(i, beta(i, i));
    for (std::size_t j = i + 1; j < beta.size(); ++j) q.set_polar(i, j, beta(i, j) + beta(j, i));
  }
  return q;
}

BilinearForm quad_lift(const QuadraticForm& q) {
  BilinearForm b(q.module());
  for (std::size_t i = 0; i < b.size(); ++i) {
    b.set(i, i, q.diag(i));
    for (std::size_t j = i + 1; j < b.size(); ++j) b.set(i, j, q.polar(i, j));
  }
  return b;
}

// ---------------------------------------------------------------- maps

void check_module_map(const ModuleMap& pi) {
  const std::size_t rows = pi.target->size();
  const std::size_t cols = pi.source->size();
  if (pi.matrix.size() != rows) throw Error(ErrorCode::kDegreeMismatch, "module map has wrong row count");
  for (std::size_t i = 0; i < rows; ++i) {
    if (pi.matrix[i].size() != cols) throw Error(ErrorCode::kDegreeMismatch, "module map has wrong column count");
    for (std::size_t k = 0; k < cols; ++k) {
      const RingElement& x = pi.matrix[i][k];
      if (x.is_zero()) continue;
      const int want = pi.source->degrees[k] - pi.target->degrees[i];
      if (x.degree() != want) {
        throw Error(ErrorCode::kDegreeMismatch, "module map entry (" + std::to_string(i) + "," +
                                                    std::to_string(k) + ") = " + x.to_string() +
                                                    " must have degree " + std::to_string(want));
      }
    }
  }
}

ModuleMap identity_map(const ModulePtr& module) {
  return ModuleMap{module, module, identity_matrix(module->coefficients, module->size())};
}

BilinearForm pull_back(const BilinearForm& beta, const ModuleMap& pi) {
  if (!beta.module()->same_as(*pi.target)) {
    throw Error(ErrorCode::kDegreeMismatch, "pull-back: form does not live on the target module");
  }
  check_module_map(pi);
  ModulePtr v = make_module(pi.target->coefficients, pi.source->names, pi.source->degrees);
  const Matrix m = matrix_multiply(matrix_multiply(matrix_transpose(pi.matrix), beta.matrix()), pi.matrix);
  return BilinearForm::from_matrix(v, m);
}

ModulePtr base_change(const RingMap& k, const ModulePtr& module) {
  return make_module(k.target(), module->names, module->degrees);
}

BilinearForm base_change(const RingMap& k, const BilinearForm& beta) {
  ModulePtr target = base_change(k, beta.module());
  BilinearForm out(target);
  for (std::size_t i = 0; i < beta.size(); ++i)
    for (std::size_t j = 0; j < beta.size(); ++j) out.set(i, j, k.apply(beta(i, j)));
  return out;
}

// ---------------------------------------------------------------- Bil(V)^0

SpaceDescription bil_space(const ModulePtr& module) {
  SpaceDescription s;
  s.module = module;
  const std::size_t m = module->size();
  s.slices.assign(m, std::vector<Slice>(m));
  s.finite = true;
  Count total = Count::finite(1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      s.slices[i][j] = homogeneous_slice(module->coefficients, module->degrees[i] + module->degrees[j]);
      if (!s.slices[i][j].finite) {
        if (s.finite) {
          total = Count::infinite("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                  "): " + s.slices[i][j].witness);
        }
        s.finite = false;
      } else if (s.finite) {
        total = total * s.slices[i][j].cardinality();
      }
    }
  s.cardinality = total;
  return s;
}

SpaceDescription bil_space(const QuotientPresentation& f) {
  SpaceDescription s = bil_space(f.module());
  if (f.infinite_tail() && s.finite) {
    s.cardinality = Count::infinite("infinite regular sequence; the window alone has " +
                                    s.cardinality.to_string() + " forms");
    s.finite = false;
  }
  return s;
}

void for_each_form(const SpaceDescription& space, const std::function<bool(const BilinearForm&)>& visit) {
  const std::size_t m = space.module->size();
  std::vector<std::vector<RingElement>> choices;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (!space.slices[i][j].finite) throw Error(ErrorCode::kInvalidArgument, "cannot enumerate an infinite space");
      choices.push_back(space.slices[i][j].elements());
    }
  std::vector<std::size_t> idx(choices.size(), 0);
  while (true) {
    BilinearForm b(space.module);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (!choices[k][idx[k]].is_zero()) b.set(k / m, k % m, choices[k][idx[k]]);
    }
    if (!visit(b)) return;
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
    if (k == idx.size()) return;
  }
}

// ---------------------------------------------------------------- diagonalization

const char* diag_status_name(DiagStatus status) {
  switch (status) {
    case DiagStatus::kDiagonalized: return "Diagonalizable";
    case DiagStatus::kNotDiagonalizable: return "NotDiagonalizable";
    case DiagStatus::kExhaustedNoWitness: return "ExhaustedNoWitness";
    case DiagStatus::kUnknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

Matrix gram(const BilinearForm& beta, const Matrix& p) {
  return matrix_multiply(matrix_multiply(matrix_transpose(p), beta.matrix()), p);
}

bool is_diagonal_matrix(const Matrix& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (i != j && !g[i][j].is_zero()) return false;
  return true;
}

// A homogeneous unit of the given degree (coefficient 1), if one exists.
std::optional<RingElement> unit_of_degree(const RingPtr& ring, int degree) {
  if (degree == 0) return RingElement::one(ring);
  const auto inv = ring->invertible_index();
  if (!inv) return std::nullopt;
  const int e = ring->generators()[*inv].degree;
  if (e == 0 || degree % e != 0) return std::nullopt;
  return RingElement::generator(ring, *inv).pow(degree / e);
}

// column_j += c * column_i
void add_column(Matrix& p, std::size_t j, std::size_t i, const RingElement& c) {
  for (auto& row : p) row[j] += c * row[i];
}

DiagonalizationResult finish(const BilinearForm& beta, Matrix p, std::string reason) {
  DiagonalizationResult r;
  r.status = DiagStatus::kDiagonalized;
  r.diagonal = BilinearForm::from_matrix(beta.module(), gram(beta, p));
  r.change_of_basis = std::move(p);
  r.reason = std::move(reason);
  return r;
}

DiagonalizationResult gaussian(const BilinearForm& beta) {
  const RingPtr& ring = beta.coefficients();
  const std::size_t m = beta.size();
  const bool char2 = ring->base().characteristic() == 2;
  const auto& deg = beta.module()->degrees;
  Matrix p = identity_matrix(ring, m);
  std::vector<bool> done(m, false);

  for (std::size_t guard = 0; guard < 4 * m * m + 8; ++guard) {
    const Matrix g = gram(beta, p);
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < m; ++i)
      if (!done[i]) rest.push_back(i);
    bool block_zero = true;
    for (std::size_t i : rest)
      for (std::size_t j : rest)
        if (!g[i][j].is_zero()) block_zero = false;
    if (block_zero) return finish(beta, std::move(p), "graded symmetric Gaussian congruence");

    std::optional<std::size_t> pivot;
    for (std::size_t i : rest)
      if (g[i][i].is_unit()) {
        pivot = i;
        break;
      }
    if (pivot) {
      const std::size_t i = *pivot;
      const RingElement inv = g[i][i].inverse();
      for (std::size_t j : rest) {
        if (j == i || g[i][j].is_zero()) continue;
        add_column(p, j, i, -(g[i][j] * inv));
      }
      done[i] = true;
      continue;
    }

    bool diag_zero = true;
    for (std::size_t i : rest)
      if (!g[i][i].is_zero()) diag_zero = false;
    if (!diag_zero) {
      DiagonalizationResult r;
      r.reason = "remaining diagonal entries are nonzero non-units";
      return r;
    }
    // an off-diagonal pair (i, j) with g_ij a unit
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    for (std::size_t i : rest)
      for (std::size_t j : rest)
        if (!pair && i != j && g[i][j].is_unit()) pair = std::make_pair(i, j);
    if (!pair) {
      DiagonalizationResult r;
      r.reason = "no unit pivot available in the remaining block";
      return r;
    }
    const auto [i, j] = *pair;
    if (!char2) {
      const auto c = unit_of_degree(ring, deg[i] - deg[j]);
      if (!c || !(RingElement::from_int(ring, 2) * *c * g[i][j]).is_unit()) {
        DiagonalizationResult r;
        r.reason = "no homogeneous unit to split the hyperbolic pair";
        return r;
      }
      add_column(p, i, j, *c);
      continue;
    }
    std::optional<std::size_t> reopen;
    for (std::size_t k = 0; k < m; ++k)
      if (done[k] && g[k][k].is_unit() && unit_of_degree(ring, deg[k] - deg[i])) {
        reopen = k;
        break;
      }
    if (!reopen) {
      DiagonalizationResult r;
      bool any_done = std::find(done.begin(), done.end(), true) != done.end();
      if (!any_done) {
        r.status = DiagStatus::kNotDiagonalizable;
        r.reason = "alternating nonzero form in characteristic 2";
      } else {
        r.reason = "no earlier pivot of compatible degree to re-open";
      }
      return r;
    }
    add_column(p, *reopen, i, *unit_of_degree(ring, deg[*reopen] - deg[i]));
    done[*reopen] = false;
  }
  DiagonalizationResult r;
  r.reason = "elimination did not terminate";
  return r;
}

DiagonalizationResult graded_search(const BilinearForm& beta, std::uint64_t bound) {
  const RingPtr& ring = beta.coefficients();
  const std::size_t m = beta.size();
  const auto& deg = beta.module()->degrees;
  DiagonalizationResult r;
  r.degree_obstruction = degree_obstruction_2x2(beta);

  std::vector<std::vector<std::vector<RingElement>>> choices(m, std::vector<std::vector<RingElement>>(m));
  mpz_class total = 1;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Slice s = homogeneous_slice(ring, deg[j] - deg[i]);
      if (!s.finite) {
        r.status = DiagStatus::kUnknown;
        r.reason = "entry slice of degree " + std::to_string(deg[j] - deg[i]) + " is infinite: " + s.witness;
        return r;
      }
      total *= s.cardinality().value();
      if (total > bound) {
        r.status = DiagStatus::kUnknown;
        r.reason = "search space exceeds the bound " + std::to_string(bound);
        return r;
      }
      choices[i][j] = s.elements();
    }

  Matrix p(m, std::vector<RingElement>(m));
  std::vector<std::size_t> idx(m * m, 0);
  while (true) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) p[i][j] = choices[i][j][idx[i * m + j]];
    ++r.candidates;
    if (determinant(p, ring).is_unit()) {
      const Matrix g = gram(beta, p);
      if (is_diagonal_matrix(g)) {
        DiagonalizationResult ok = finish(beta, p, "graded congruence search");
        ok.candidates = r.candidates;
        ok.degree_obstruction = r.degree_obstruction;
        return ok;
      }
    }
    std::size_t k = 0;
    while (k < idx.size()) {
      const std::size_t i = k / m;
      const std::size_t j = k % m;
      if (++idx[k] < choices[i][j].size()) break;
      idx[k++] = 0;
    }
    if (k == idx.size()) break;
  }
  r.status = DiagStatus::kExhaustedNoWitness;
  r.reason = "no degree-valid invertible basis change diagonalizes the form";
  return r;
}

}  // namespace

bool degree_obstruction_2x2(const BilinearForm& beta) {
  if (beta.size() != 2) return false;
  const auto& deg = beta.module()->degrees;
  for (std::size_t a = 0; a < 2; ++a) {
    const std::size_t b = 1 - a;
    if (!beta(a, a).is_zero() || beta(a, b).is_zero()) continue;
    const Slice s = homogeneous_slice(beta.coefficients(), deg[a] - deg[b]);
    if (s.finite && s.monomials.empty()) return true;
  }
  return false;
}

DiagonalizationResult congruence_diagonalize(const BilinearForm& beta, const DiagonalizeOptions& options) {
  if (!classify_form(beta).symmetric) throw Error(ErrorCode::kNotSymmetric, "form is not symmetric");
  const RingPtr& ring = beta.coefficients();
  if (beta.is_diagonal()) return finish(beta, identity_matrix(ring, beta.size()), "already diagonal");
  if (ring->base().characteristic() == 2 && classify_form(beta).alternating) {
    DiagonalizationResult r;
    r.status = DiagStatus::kNotDiagonalizable;
    r.reason = "alternating nonzero form in characteristic 2: every congruent form has zero diagonal";
    return r;
  }
  if (options.mode == DiagonalizeMode::kGradedSearch) return graded_search(beta, options.search_bound);
  return gaussian(beta);
}

}  // namespace qforms
