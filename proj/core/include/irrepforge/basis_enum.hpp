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

#ifndef IRREPFORGE_BASIS_ENUM_HPP
#define IRREPFORGE_BASIS_ENUM_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "irrepforge/boson_algebra.hpp"
#include "irrepforge/chain.hpp"

namespace irrepforge {

/// Highest weight K = (κ_1, …, κ_{m-1}) of an su(m) irrep.
class IrrepLabel {
 public:
  IrrepLabel() = default;
  explicit IrrepLabel(std::vector<int> kappa);

  int rank() const { return static_cast<int>(kappa_.size()); }
  /// m for an su(m) label.
  int algebra() const { return rank() + 1; }
  int operator[](std::size_t a) const { return kappa_[a]; }
  const std::vector<int>& values() const { return kappa_; }
  /// N_K = κ_1 + 2κ_2 + … + (m-1)κ_{m-1}.
  int boson_count() const;

  friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
  friend auto operator<=>(const IrrepLabel&, const IrrepLabel&) = default;

 private:
  std::vector<int> kappa_;
};

/// Basis sets of every weight space of one su(m) irrep, keyed by the level-m
/// weight (descending). Each list is linearly independent and kept in
/// creation order.
struct VertexTable {
  int level = 0;
  std::map<Weight, std::vector<StateVector>, std::greater<>> vertices;
  std::uint64_t lowering_ops = 0;

  std::size_t state_count() const;
  std::size_t multiplicity(const Weight& w) const;
};

enum class GeneratorKind { kRaising, kLowering, kCartan };

/// Raising, lowering or Cartan generators of the level-m subalgebra, in
/// lexicographic (i, j) order over I^(m) = {i_1 < … < i_m}.
std::vector<OperatorId> generator_set(const SubalgebraChain& chain, int m, GeneratorKind kind);

/// Product of leading-minor determinants of the creation-operator matrix,
/// Det_{n-1}^{κ_{n-1}} ⋯ Det_1^{κ_1} |0⟩, expanded.
StateVector build_hws(int n, const IrrepLabel& K);

/// Breadth-first enumeration of the irrep generated by a level-m highest
/// weight state. A lowered state is kept iff it is linearly independent of
/// the states already stored at its weight; kept states are stored in
/// primitive form.
VertexTable basis_set(int m, const StateVector& hws, const SubalgebraChain& chain);

}  // namespace irrepforge

#endif  // IRREPFORGE_BASIS_ENUM_HPP
