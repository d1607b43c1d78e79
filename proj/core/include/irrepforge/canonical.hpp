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

#ifndef IRREPFORGE_CANONICAL_HPP
#define IRREPFORGE_CANONICAL_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "irrepforge/basis_enum.hpp"
#include "irrepforge/boson_algebra.hpp"
#include "irrepforge/chain.hpp"

namespace irrepforge {

/// Full label {K^(m), Λ^(m) : 2 <= m <= n} of one canonical basis state,
/// keyed by level m (iterated from n down to 2).
struct CanonicalLabel {
  std::map<int, std::vector<int>, std::greater<>> irreps;
  std::map<int, Weight, std::greater<>> weights;

  int n() const { return irreps.empty() ? 0 : irreps.begin()->first; }
  friend bool operator==(const CanonicalLabel&, const CanonicalLabel&) = default;
};

/// Strict weak order used for the output of canonical_basis: Λ^(n), then
/// K^(n-1), Λ^(n-1), …, K^(2), Λ^(2), each compared descending.
bool canonical_order(const CanonicalLabel& a, const CanonicalLabel& b);

struct CanonicalState {
  StateVector state;  // unnormalized; norm² is state.norm_sq()
  CanonicalLabel label;
};

/// One basis_set invocation made while building a canonical basis.
struct BasisSetRun {
  int level = 0;
  IrrepLabel irrep;
  std::size_t states = 0;
  std::uint64_t lowering_ops = 0;
};

struct CanonicalBasis {
  int n = 0;
  IrrepLabel irrep;
  SubalgebraChain chain;
  StateVector hws;
  std::vector<CanonicalState> states;
  std::vector<BasisSetRun> runs;
  std::uint64_t lowering_ops = 0;

  std::size_t size() const { return states.size(); }
  std::optional<std::size_t> index_of(const CanonicalLabel& label) const;
};

/// Decomposes the irrep K down the subalgebra chain into canonical basis
/// states with full labels, mutually orthogonal, phases fixed so that
/// simple_raising_overlap(state, hws) >= 0.
CanonicalBasis canonical_basis(int n, const IrrepLabel& K, const SubalgebraChain& chain);

struct RaiseResult {
  StateVector state;
  std::vector<OperatorId> ops;
};

/// Applies, repeatedly, the first level-(m-1) raising operator (lexicographic
/// order) that does not annihilate the state, until none remains.
RaiseResult raise_to_hws(const StateVector& s, int m, const SubalgebraChain& chain);

/// ⟨hws| c_{1,2}^{p_1} c_{2,3}^{p_2} ⋯ c_{n-1,n}^{p_{n-1}} |s⟩ with the powers
/// fixed by the site occupations of s and hws.
Rational simple_raising_overlap(const StateVector& s, const StateVector& hws);

/// simple_raising_overlap when it is nonzero. Otherwise the overlap with hws
/// after a greedy walk that applies, at each step, the first c_{l,l+1}
/// (l ascending) not annihilating the state until none remains.
Rational phase_overlap(const StateVector& s, const StateVector& hws);

/// Returns ±s so that phase_overlap with irrep_hws is positive.
StateVector fix_phase(const StateVector& s, const StateVector& irrep_hws);

/// Dimension of the su(n) irrep K from the product formula.
std::uint64_t dimension(int n, const IrrepLabel& K);

}  // namespace irrepforge

#endif  // IRREPFORGE_CANONICAL_HPP
