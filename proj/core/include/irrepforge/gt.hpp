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

#ifndef IRREPFORGE_GT_HPP
#define IRREPFORGE_GT_HPP

#include <vector>

#include "irrepforge/basis_enum.hpp"
#include "irrepforge/boson_algebra.hpp"
#include "irrepforge/canonical.hpp"

namespace irrepforge {

/// Gelfand-Tsetlin pattern. rows[0] is the top row (length n), rows[n-1]
/// has a single entry. rows[n-ℓ][k-1] = m_{k,ℓ}.
struct GTPattern {
  std::vector<std::vector<int>> rows;

  int n() const { return static_cast<int>(rows.size()); }
  /// Row of level ℓ, 1 <= ℓ <= n.
  const std::vector<int>& row(int level) const { return rows[rows.size() - level]; }

  friend bool operator==(const GTPattern&, const GTPattern&) = default;
};

/// Throws InvalidArgument if the row lengths or betweenness conditions fail.
void check_pattern(const GTPattern& p);

/// Pattern of a canonical-chain state: row ℓ carries the differences K^(ℓ)
/// with its sum pinned to the number of bosons on sites 1..ℓ.
GTPattern gt_pattern(const CanonicalLabel& label, const StateVector& state);

/// λ_ℓ = Σ_k m_{k,ℓ} - ½(Σ_k m_{k,ℓ+1} + Σ_k m_{k,ℓ-1}), possibly half-integral.
/// This is half the eigenvalue of h_ℓ on the corresponding state.
Rational gt_weight(const GTPattern& p, int level);

/// Boson-realization weight ν_ℓ - ν_{ℓ+1} = 2 λ_ℓ for ℓ = 1..n-1.
Weight gt_boson_weight(const GTPattern& p);

/// Site occupations ν_ℓ = Σ_k m_{k,ℓ} - Σ_k m_{k,ℓ-1}.
std::vector<int> gt_site_occupations(const GTPattern& p);

/// Top row (m_{1,n}, …, m_{n,n}) with m_{n,n} = 0 and m_{k,n} - m_{k+1,n} = κ_k.
std::vector<int> gt_top_row(const IrrepLabel& K);

/// Every pattern with the given top row, in lexicographic order of rows.
std::vector<GTPattern> enumerate_gt_patterns(const IrrepLabel& K);

}  // namespace irrepforge

#endif  // IRREPFORGE_GT_HPP
