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

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "irrepforge/canonical.hpp"
#include "irrepforge/errors.hpp"
#include "irrepforge/gt.hpp"
#include "test_util.hpp"

namespace irrepforge {
namespace {

using testing::ket;

TEST(Chain, ValidateExamples) {
  for (int n = 2; n <= 6; ++n) EXPECT_FALSE(validate_chain(n, SubalgebraChain::canonical(n).levels()));
  EXPECT_FALSE(validate_chain(3, {{1, 3}}));
  EXPECT_TRUE(validate_chain(3, {{2, 4}}));
  EXPECT_TRUE(validate_chain(4, {{1, 2, 3}, {1, 4}}));  // not nested
  EXPECT_TRUE(validate_chain(4, {{1, 2, 3}}));          // missing level
  EXPECT_TRUE(validate_chain(4, {{1, 3, 2}, {1, 3}}));  // not increasing
  EXPECT_TRUE(validate_chain(3, {{1, 2, 3}}));          // wrong size
}

TEST(Chain, FromLevels) {
  const auto chain = SubalgebraChain::from_levels(4, {{1, 2, 4}, {2, 4}});
  EXPECT_EQ(std::vector<int>(chain.indices(4).begin(), chain.indices(4).end()), (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(std::vector<int>(chain.indices(2).begin(), chain.indices(2).end()), (std::vector<int>{2, 4}));
  EXPECT_FALSE(chain.is_canonical());
  EXPECT_TRUE(SubalgebraChain::from_levels(3, {{1, 2}}).is_canonical());
  EXPECT_THROW(SubalgebraChain::from_levels(3, {{2, 4}}), InvalidArgument);
}

TEST(Dimension, Examples) {
  EXPECT_EQ(dimension(2, IrrepLabel({4})), 5u);
  EXPECT_EQ(dimension(3, IrrepLabel({1, 1})), 8u);
  EXPECT_EQ(dimension(4, IrrepLabel({1, 1, 1})), 64u);
  EXPECT_EQ(dimension(3, IrrepLabel({2, 2})), 27u);
  EXPECT_EQ(dimension(5, IrrepLabel({0, 0, 0, 0})), 1u);
  EXPECT_THROW(dimension(3, IrrepLabel({1})), InvalidArgument);
}

TEST(Dimension, MatchesGtPatternCount) {
  for (int n = 2; n <= 5; ++n) {
    std::vector<int> k(n - 1, 0);
    // Odometer over labels with entries 0..2.
    while (true) {
      const IrrepLabel K(k);
      if (K.boson_count() <= 8) EXPECT_EQ(enumerate_gt_patterns(K).size(), dimension(n, K)) << n;
      std::size_t a = 0;
      while (a < k.size() && k[a] == 2) k[a++] = 0;
      if (a == k.size()) break;
      ++k[a];
    }
  }
}

TEST(RaiseToHws, AlreadyHighest) {
  const auto chain = SubalgebraChain::canonical(3);
  const StateVector s = ket(3, {{1, 1, 1}});
  const auto r = raise_to_hws(s, 3, chain);
  EXPECT_EQ(r.state, s);
  EXPECT_TRUE(r.ops.empty());
}

TEST(RaiseToHws, OneStep) {
  const auto r = raise_to_hws(ket(3, {{2, 1, 1}}), 3, SubalgebraChain::canonical(3));
  EXPECT_EQ(r.state, ket(3, {{1, 1, 1}}));
  EXPECT_EQ(r.ops, std::vector<OperatorId>{OperatorId::transfer(1, 2)});
}

TEST(RaiseToHws, AdjointZeroWeightLandsOnSu2Hws) {
  const auto chain = SubalgebraChain::canonical(3);
  const StateVector hws = build_hws(3, IrrepLabel({1, 1}));
  const StateVector s = apply_transfer(2, 1, apply_transfer(3, 2, hws));
  ASSERT_EQ(*weight(s, 3), (Weight{0, 0}));
  const auto r = raise_to_hws(s, 3, chain);
  EXPECT_TRUE(apply_transfer(1, 2, r.state).is_zero());
  EXPECT_GE((*weight(r.state, 2))[0], 0);
}

TEST(RaiseToHws, ZeroStateThrows) {
  EXPECT_THROW(raise_to_hws(StateVector(3), 3, SubalgebraChain::canonical(3)), InvalidArgument);
}

TEST(FixPhase, FlipsNegativeOverlap) {
  const StateVector hws = ket(2, {{1, 1, 1}});
  EXPECT_EQ(simple_raising_overlap(ket(2, {{2, 1, 1}}, -1), hws), -1);
  EXPECT_EQ(fix_phase(ket(2, {{2, 1, 1}}, -1), hws), ket(2, {{2, 1, 1}}));
  EXPECT_EQ(fix_phase(ket(2, {{2, 1, 1}}, 3), hws), ket(2, {{2, 1, 1}}, 3));
}

TEST(FixPhase, DegenerateOverlapUsesGreedyWalk) {
  // In the antisymmetric irrep c_{2,3} cannot act first on the (0,1,1) state.
  const StateVector hws = build_hws(3, IrrepLabel({0, 1}));
  const StateVector s = ket(3, {{2, 1, 1}, {3, 2, 1}}) - ket(3, {{2, 2, 1}, {3, 1, 1}});
  EXPECT_EQ(simple_raising_overlap(s, hws), 0);
  EXPECT_NE(phase_overlap(s, hws), 0);
  const StateVector fixed = fix_phase(s, hws);
  EXPECT_GT(phase_overlap(fixed, hws), 0);
  EXPECT_EQ(fix_phase(fixed.scaled(-1), hws), fixed);
}

TEST(CanonicalBasis, AdjointZeroWeightResolvedBySu2Label) {
  const auto basis = canonical_basis(3, IrrepLabel({1, 1}), SubalgebraChain::canonical(3));
  ASSERT_EQ(basis.size(), 8u);
  std::set<std::vector<int>> k2;
  for (const auto& s : basis.states) {
    if (s.label.weights.at(3) == Weight{0, 0}) {
      k2.insert(s.label.irreps.at(2));
      EXPECT_EQ(s.label.weights.at(2), (Weight{0}));
    }
  }
  EXPECT_EQ(k2, (std::set<std::vector<int>>{{0}, {2}}));
}

TEST(CanonicalBasis, Su2MatchesBasisSet) {
  for (int two_j = 0; two_j <= 6; ++two_j) {
    const auto chain = SubalgebraChain::canonical(2);
    const auto basis = canonical_basis(2, IrrepLabel({two_j}), chain);
    const auto table = basis_set(2, build_hws(2, IrrepLabel({two_j})), chain);
    ASSERT_EQ(basis.size(), table.state_count());
    std::size_t a = 0;
    for (const auto& [w, states] : table.vertices) {
      const auto& cs = basis.states[a++];
      EXPECT_EQ(cs.label.irreps.at(2), std::vector<int>{two_j});
      EXPECT_EQ(cs.label.weights.at(2), w);
      EXPECT_EQ(cs.state, states[0]);
    }
  }
}

class CanonicalSuite : public ::testing::TestWithParam<std::pair<int, std::vector<int>>> {};

TEST_P(CanonicalSuite, StructureAndLabels) {
  const auto& [n, k] = GetParam();
  const IrrepLabel K(k);
  const auto chain = SubalgebraChain::canonical(n);
  const auto basis = canonical_basis(n, K, chain);
  ASSERT_EQ(basis.size(), dimension(n, K));
  EXPECT_LE(basis.lowering_ops, dimension(n, K) * n * (n - 1) * (n - 1) / 2);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const auto& [s, label] = basis.states[a];
    EXPECT_EQ(label.irreps.at(n), k);
    if (a + 1 < basis.size()) EXPECT_TRUE(canonical_order(label, basis.states[a + 1].label));
    for (std::size_t b = a + 1; b < basis.size(); ++b) EXPECT_EQ(inner_product(s, basis.states[b].state), 0);
    EXPECT_GE(simple_raising_overlap(s, basis.hws), 0);
    EXPECT_GT(phase_overlap(s, basis.hws), 0);
    for (int m = n; m >= 2; --m) {
      EXPECT_EQ(*weight_on(s, chain.indices(m)), label.weights.at(m));
      if (m < n) {
        // Raising into the level-m hws lands on weight K^(m) and is annihilated.
        const StateVector top = raise_to_hws(s, m + 1, chain).state;
        EXPECT_EQ(*weight_on(top, chain.indices(m)), label.irreps.at(m));
        for (const auto& op : generator_set(chain, m, GeneratorKind::kRaising)) {
          EXPECT_TRUE(apply(op, top).is_zero());
        }
      }
    }
    EXPECT_EQ(basis.index_of(label), a);
  }
}

TEST_P(CanonicalSuite, GtPatternsMatchEnumeratorAndWeights) {
  const auto& [n, k] = GetParam();
  const IrrepLabel K(k);
  const auto basis = canonical_basis(n, K, SubalgebraChain::canonical(n));
  std::vector<GTPattern> from_states;
  for (const auto& [s, label] : basis.states) {
    const GTPattern p = gt_pattern(label, s);
    EXPECT_NO_THROW(check_pattern(p));
    EXPECT_EQ(p.rows[0], gt_top_row(K));
    const auto nu = *site_occupations(s);
    EXPECT_EQ(gt_site_occupations(p), nu);
    for (int l = 1; l < n; ++l) EXPECT_EQ(Rational(nu[l - 1] - nu[l]), 2 * gt_weight(p, l));
    EXPECT_EQ(gt_boson_weight(p), label.weights.at(n));
    from_states.push_back(p);
  }
  auto enumerated = enumerate_gt_patterns(K);
  auto key = [](const GTPattern& a, const GTPattern& b) { return a.rows < b.rows; };
  std::sort(from_states.begin(), from_states.end(), key);
  std::sort(enumerated.begin(), enumerated.end(), key);
  EXPECT_EQ(from_states, enumerated);
}

INSTANTIATE_TEST_SUITE_P(Irreps, CanonicalSuite,
                         ::testing::Values(std::make_pair(2, std::vector<int>{3}),
                                           std::make_pair(3, std::vector<int>{1, 1}),
                                           std::make_pair(3, std::vector<int>{0, 1}),
                                           std::make_pair(3, std::vector<int>{2, 1}),
                                           std::make_pair(3, std::vector<int>{2, 2}),
                                           std::make_pair(4, std::vector<int>{1, 0, 1}),
                                           std::make_pair(4, std::vector<int>{0, 1, 0}),
                                           std::make_pair(4, std::vector<int>{1, 1, 0}),
                                           std::make_pair(5, std::vector<int>{1, 0, 0, 1})));

TEST(CanonicalBasis, Su3TwoTwoOrthogonal) {
  const auto basis = canonical_basis(3, IrrepLabel({2, 2}), SubalgebraChain::canonical(3));
  ASSERT_EQ(basis.size(), 27u);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational g = inner_product(basis.states[a].state, basis.states[b].state);
      if (a == b) {
        EXPECT_EQ(g, basis.states[a].state.norm_sq());
      } else {
        EXPECT_EQ(g, 0);
      }
    }
}

TEST(CanonicalBasis, NonCanonicalChain) {
  const auto chain = SubalgebraChain::from_levels(4, {{1, 2, 4}, {2, 4}});
  const IrrepLabel K({1, 0, 1});
  const auto basis = canonical_basis(4, K, chain);
  ASSERT_EQ(basis.size(), 15u);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const auto& [s, label] = basis.states[a];
    for (int m = 2; m <= 4; ++m) EXPECT_EQ(*weight_on(s, chain.indices(m)), label.weights.at(m));
    for (std::size_t b = a + 1; b < basis.size(); ++b) EXPECT_EQ(inner_product(s, basis.states[b].state), 0);
  }
}

TEST(CanonicalBasis, Deterministic) {
  const auto a = canonical_basis(4, IrrepLabel({1, 0, 1}), SubalgebraChain::canonical(4));
  const auto b = canonical_basis(4, IrrepLabel({1, 0, 1}), SubalgebraChain::canonical(4));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a.states[i].state, b.states[i].state);
    EXPECT_EQ(a.states[i].label, b.states[i].label);
  }
}

TEST(CanonicalBasis, Errors) {
  EXPECT_THROW(canonical_basis(3, IrrepLabel({1}), SubalgebraChain::canonical(3)), InvalidArgument);
  EXPECT_THROW(canonical_basis(3, IrrepLabel({1, 0}), SubalgebraChain::canonical(4)), InvalidArgument);
}

TEST(GtPattern, Examples) {
  const auto su2 = canonical_basis(2, IrrepLabel({2}), SubalgebraChain::canonical(2));
  const auto& mid = su2.states[1];
  ASSERT_EQ(mid.label.weights.at(2), (Weight{0}));
  EXPECT_EQ(gt_pattern(mid.label, mid.state).rows, (std::vector<std::vector<int>>{{2, 0}, {1}}));

  const auto adj = canonical_basis(3, IrrepLabel({1, 1}), SubalgebraChain::canonical(3));
  const auto idx = std::find_if(adj.states.begin(), adj.states.end(), [](const CanonicalState& s) {
    return s.label.weights.at(3) == Weight{1, 1};
  });
  ASSERT_NE(idx, adj.states.end());
  EXPECT_EQ(gt_pattern(idx->label, idx->state).rows, (std::vector<std::vector<int>>{{2, 1, 0}, {2, 1}, {2}}));

  const auto trivial = canonical_basis(4, IrrepLabel({0, 0, 0}), SubalgebraChain::canonical(4));
  ASSERT_EQ(trivial.size(), 1u);
  const auto p = gt_pattern(trivial.states[0].label, trivial.states[0].state);
  for (const auto& row : p.rows) EXPECT_TRUE(std::all_of(row.begin(), row.end(), [](int x) { return x == 0; }));
}

TEST(GtWeight, Examples) {
  EXPECT_EQ(gt_weight(GTPattern{{{2, 0}, {1}}}, 1), 0);
  EXPECT_EQ(gt_weight(GTPattern{{{2, 1, 0}, {2, 1}, {2}}}, 2), Rational(1, 2));
  EXPECT_EQ(gt_weight(GTPattern{{{0, 0, 0}, {0, 0}, {0}}}, 1), 0);
  EXPECT_THROW(gt_weight(GTPattern{{{2, 0}, {3}}}, 1), InvalidArgument);
  EXPECT_THROW(gt_weight(GTPattern{{{2, 0}, {1}}}, 2), InvalidArgument);
}

TEST(GtPattern, CheckPatternRejectsMalformed) {
  EXPECT_THROW(check_pattern(GTPattern{{{2, 0}, {1, 0}}}), InvalidArgument);
  EXPECT_THROW(check_pattern(GTPattern{{{2, 1, 0}, {1, 1}, {2}}}), InvalidArgument);
  EXPECT_NO_THROW(check_pattern(GTPattern{{{2, 1, 0}, {1, 1}, {1}}}));
}

TEST(GtPattern, TopRow) { EXPECT_EQ(gt_top_row(IrrepLabel({1, 0, 2})), (std::vector<int>{3, 2, 2, 0})); }

}  // namespace
}  // namespace irrepforge
