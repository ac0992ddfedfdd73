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

#ifndef QFORMS_FORMS_HPP
#define QFORMS_FORMS_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qforms/graded_ring.hpp"

namespace qforms {

struct SequenceGenerator {
  std::string name;
  int degree = 0;
};

// Free module V = I/I^2[1] over a coefficient ring, with basis xbar_i of
// odd degree |x_i| + 1.
struct FormModule {
  RingPtr coefficients;
  std::vector<std::string> names;  // names of the x_i
  std::vector<int> degrees;        // |xbar_i|

  std::size_t size() const { return degrees.size(); }
  bool same_as(const FormModule& other) const;
};
using ModulePtr = std::shared_ptr<const FormModule>;

ModulePtr make_module(RingPtr coefficients, std::vector<std::string> names, std::vector<int> degrees);

class QuotientPresentation;
using PresentationPtr = std::shared_ptr<const QuotientPresentation>;

// A regular quotient F = R/(x_1, ..., x_m). Regularity is trusted.
class QuotientPresentation {
 public:
  const std::string& name() const { return name_; }
  // Ambient ring R_*; may be null when only F_* is materialized.
  const RingPtr& ambient() const { return ambient_; }
  const std::vector<SequenceGenerator>& sequence() const { return sequence_; }
  const RingPtr& coefficients() const { return module_->coefficients; }
  const ModulePtr& module() const { return module_; }
  std::size_t size() const { return sequence_.size(); }
  int basis_degree(std::size_t i) const { return sequence_[i].degree + 1; }
  bool infinite_tail() const { return infinite_tail_; }

  friend PresentationPtr make_quotient(std::string name, RingPtr ambient,
                                       std::vector<SequenceGenerator> sequence, RingPtr coefficients,
                                       bool infinite_tail);

 private:
  QuotientPresentation() = default;
  std::string name_;
  RingPtr ambient_;
  std::vector<SequenceGenerator> sequence_;
  ModulePtr module_;
  bool infinite_tail_ = false;
};

PresentationPtr make_quotient(std::string name, RingPtr ambient, std::vector<SequenceGenerator> sequence,
                              RingPtr coefficients, bool infinite_tail = false);

using Matrix = std::vector<std::vector<RingElement>>;

Matrix identity_matrix(const RingPtr& ring, std::size_t m);
Matrix matrix_transpose(const Matrix& a);
Matrix matrix_multiply(const Matrix& a, const Matrix& b);
RingElement determinant(const Matrix& a, const RingPtr& ring);

// Degree-0 bilinear form on V: entry (i, j) = beta(xbar_i (x) xbar_j),
// homogeneous of degree |xbar_i| + |xbar_j|.
class BilinearForm {
 public:
  explicit BilinearForm(ModulePtr module);
  static BilinearForm zero(ModulePtr module) { return BilinearForm(std::move(module)); }
  static BilinearForm from_entries(ModulePtr module,
                                   const std::vector<std::tuple<std::size_t, std::size_t, RingElement>>& entries);
  static BilinearForm from_matrix(ModulePtr module, const Matrix& entries);

  const ModulePtr& module() const { return module_; }
  const RingPtr& coefficients() const { return module_->coefficients; }
  std::size_t size() const { return module_->size(); }
  const RingElement& operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  // Throws kDegreeMismatch when x is nonzero and not of degree |xbar_i|+|xbar_j|.
  void set(std::size_t i, std::size_t j, RingElement x);
  int entry_degree(std::size_t i, std::size_t j) const { return module_->degrees[i] + module_->degrees[j]; }
  const Matrix& matrix() const { return entries_; }

  bool is_zero() const;
  bool is_diagonal() const;
  BilinearForm operator+(const BilinearForm& other) const;
  BilinearForm operator-(const BilinearForm& other) const;
  BilinearForm operator-() const;
  BilinearForm scaled(const RingElement& c) const;  // c of degree 0
  bool operator==(const BilinearForm& other) const;
  bool operator!=(const BilinearForm& other) const { return !(*this == other); }
  bool operator<(const BilinearForm& other) const;

  std::string to_string() const;

 private:
  ModulePtr module_;
  Matrix entries_;
};

struct FormClass {
  bool symmetric = false;
  bool antisymmetric = false;
  bool alternating = false;
};

BilinearForm transpose(const BilinearForm& beta);
FormClass classify_form(const BilinearForm& beta);

// q(xbar_i) on the diagonal, polar values b(xbar_i, xbar_j) for i < j.
class QuadraticForm {
 public:
  explicit QuadraticForm(ModulePtr module);
  const ModulePtr& module() const { return module_; }
  const RingElement& diag(std::size_t i) const { return diag_[i]; }
  const RingElement& polar(std::size_t i, std::size_t j) const { return polar_[i][j]; }
  void set_diag(std::size_t i, RingElement x);
  void set_polar(std::size_t i, std::size_t j, RingElement x);  // i < j
  // q(sum c_i xbar_i) for degree-0 coefficient vectors.
  RingElement evaluate(const std::vector<RingElement>& c) const;
  bool is_zero() const;
  bool operator==(const QuadraticForm& other) const;
  std::string to_string() const;

 private:
  ModulePtr module_;
  std::vector<RingElement> diag_;
  Matrix polar_;
};

QuadraticForm chi(const BilinearForm& beta);
BilinearForm quad_lift(const QuadraticForm& q);

// Module morphism V -> W given by its matrix over W's coefficients:
// pi(vbar_k) = sum_i matrix[i][k] wbar_i, entry (i, k) of degree
// |vbar_k| - |wbar_i|.
struct ModuleMap {
  ModulePtr source;  // V (its coefficient ring is ignored; W's is used)
  ModulePtr target;  // W
  Matrix matrix;
};

void check_module_map(const ModuleMap& pi);
ModuleMap identity_map(const ModulePtr& module);
// pi^*(beta) as a form on V with coefficients of W.
BilinearForm pull_back(const BilinearForm& beta, const ModuleMap& pi);
// k_* (x) beta along a graded ring map out of beta's coefficients.
BilinearForm base_change(const RingMap& k, const BilinearForm& beta);
ModulePtr base_change(const RingMap& k, const ModulePtr& module);

// Entry slices of Bil(V)^0 and its cardinality.
struct SpaceDescription {
  ModulePtr module;
  std::vector<std::vector<Slice>> slices;  // slices[i][j] for entry (i, j)
  Count cardinality;                        // of the windowed module
  bool finite = false;
};

SpaceDescription bil_space(const ModulePtr& module);
// Infinite whenever the regular sequence has an infinite tail, even if the
// window itself is finite.
SpaceDescription bil_space(const QuotientPresentation& f);
// Visits every form of a finite space; stops early when visit returns false.
void for_each_form(const SpaceDescription& space, const std::function<bool(const BilinearForm&)>& visit);

enum class DiagonalizeMode { kField, kGradedSearch };
enum class DiagStatus { kDiagonalized, kNotDiagonalizable, kExhaustedNoWitness, kUnknown };

const char* diag_status_name(DiagStatus status);

struct DiagonalizationResult {
  DiagStatus status = DiagStatus::kUnknown;
  // P with P^t B P diagonal; column j is the new basis vector f_j.
  std::optional<Matrix> change_of_basis;
  std::optional<BilinearForm> diagonal;
  bool degree_obstruction = false;
  std::uint64_t candidates = 0;
  std::string reason;
};

struct DiagonalizeOptions {
  DiagonalizeMode mode = DiagonalizeMode::kField;
  std::uint64_t search_bound = 1000000;  // graded-search: max candidate matrices
};

// Throws kNotSymmetric unless beta is symmetric.
DiagonalizationResult congruence_diagonalize(const BilinearForm& beta, const DiagonalizeOptions& options = {});

// The 2x2 degree obstruction: B_00 = 0, B_01 != 0 and no nonzero element
// of degree |xbar_0| - |xbar_1| exists, so every degree-valid basis change
// leaves a nonzero off-diagonal entry.
bool degree_obstruction_2x2(const BilinearForm& beta);

}  // namespace qforms

#endif  // QFORMS_FORMS_HPP
