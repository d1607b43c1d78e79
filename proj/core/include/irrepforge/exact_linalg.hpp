// Copyright 2026 The IrrepForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IRREPFORGE_EXACT_LINALG_HPP
#define IRREPFORGE_EXACT_LINALG_HPP

#include <span>
#include <vector>

#include "irrepforge/boson_algebra.hpp"

namespace irrepforge {

/// An ordered, linearly independent list of states together with its exact
/// Gram matrix. Alongside the Gram matrix it keeps an LDLᵀ factorization so
/// that testing or projecting a candidate costs O(k²) rational operations
/// after the k inner products with the basis.
class GramContext {
 public:
  GramContext() = default;

  std::span<const StateVector> basis() const { return basis_; }
  const std::vector<std::vector<Rational>>& gram() const { return gram_; }
  std::size_t size() const { return basis_.size(); }
  bool empty() const { return basis_.empty(); }

  /// True iff the bordered Gram matrix of basis ∪ {candidate} is nonsingular.
  bool is_independent(const StateVector& candidate) const;

  /// Component of v orthogonal to span(basis).
  StateVector project_out(const StateVector& v) const;

  /// Appends candidate; throws PreconditionError if it is dependent.
  friend GramContext extend(GramContext ctx, StateVector candidate);

 private:
  struct Solve {
    std::vector<Rational> overlaps;  // b_a = ⟨basis_a, v⟩
    std::vector<Rational> forward;   // y with L y = b
    Rational schur;                  // ⟨v,v⟩ - Σ y_a² / d_a
  };
  Solve solve(const StateVector& v) const;
  void check_same_n(const StateVector& v) const;

  std::vector<StateVector> basis_;
  std::vector<std::vector<Rational>> gram_;
  std::vector<std::vector<Rational>> lower_;  // unit lower-triangular L, row a has a entries
  std::vector<Rational> diag_;                // D
};

bool is_independent(const GramContext& ctx, const StateVector& candidate);
GramContext extend(GramContext ctx, StateVector candidate);

/// Orthogonal-complement projection of v against an independent span.
/// Throws PreconditionError if the span is dependent.
StateVector project_out(std::span<const StateVector> span, const StateVector& v);

}  // namespace irrepforge

#endif  // IRREPFORGE_EXACT_LINALG_HPP
