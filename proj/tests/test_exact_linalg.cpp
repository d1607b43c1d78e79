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

#include <random>

#include <gtest/gtest.h>

#include "irrepforge/errors.hpp"
#include "irrepforge/exact_linalg.hpp"
#include "test_util.hpp"

namespace irrepforge {
namespace {

using testing::ket;
using testing::random_state;

GramContext context_of(std::initializer_list<StateVector> states) {
  GramContext ctx;
  for (const auto& s : states) ctx = extend(std::move(ctx), s);
  return ctx;
}

TEST(IsIndependent, ScalarMultipleIsDependent) {
  const StateVector s = ket(3, {{1, 1, 1}, {2, 2, 1}});
  EXPECT_FALSE(context_of({s}).is_independent(s.scaled(3)));
}

TEST(IsIndependent, OrthogonalMonomial) {
  EXPECT_TRUE(context_of({ket(2, {{1, 1, 1}})}).is_independent(ket(2, {{2, 1, 1}})));
}

TEST(IsIndependent, ExplicitCombination) {
  const StateVector a = ket(3, {{1, 1, 1}, {2, 2, 1}});
  const StateVector b = ket(3, {{1, 2, 1}, {2, 1, 1}});
  EXPECT_FALSE(context_of({a, b}).is_independent(a + b));
  EXPECT_FALSE(is_independent(context_of({a, b}), a - b.scaled(5)));
}

TEST(IsIndependent, DoesNotModifyContext) {
  const GramContext ctx = context_of({ket(2, {{1, 1, 1}})});
  (void)ctx.is_independent(ket(2, {{2, 1, 1}}));
  EXPECT_EQ(ctx.size(), 1u);
}

TEST(Extend, GramMatrices) {
  const StateVector s = ket(2, {{1, 1, 2}}, 3);
  EXPECT_EQ(context_of({s}).gram(), (std::vector<std::vector<Rational>>{{18}}));
  EXPECT_EQ(context_of({ket(2, {{1, 1, 1}}), ket(2, {{2, 1, 1}})}).gram(),
            (std::vector<std::vector<Rational>>{{1, 0}, {0, 1}}));
  EXPECT_EQ(context_of({ket(2, {{1, 1, 2}}), ket(2, {{1, 1, 1}, {2, 1, 1}})}).gram(),
            (std::vector<std::vector<Rational>>{{2, 0}, {0, 1}}));
}

TEST(Extend, GramMatchesRecomputedInnerProducts) {
  std::mt19937_64 rng(23);
  GramContext ctx;
  while (ctx.size() < 5) {
    const StateVector s = random_state(3, 2, 3, rng);
    if (s.is_zero() || !ctx.is_independent(s)) continue;
    ctx = extend(std::move(ctx), s);
  }
  for (std::size_t a = 0; a < ctx.size(); ++a)
    for (std::size_t b = 0; b < ctx.size(); ++b)
      EXPECT_EQ(ctx.gram()[a][b], inner_product(ctx.basis()[a], ctx.basis()[b]));
}

TEST(Extend, RejectsDependentCandidate) {
  const StateVector s = ket(2, {{1, 1, 1}});
  EXPECT_THROW(extend(context_of({s}), s.scaled(2)), PreconditionError);
  EXPECT_THROW(extend(GramContext{}, StateVector(2)), PreconditionError);
}

TEST(ProjectOut, Examples) {
  const std::vector<StateVector> one{ket(2, {{1, 1, 1}})};
  EXPECT_TRUE(project_out(one, ket(2, {{1, 1, 1}})).is_zero());
  EXPECT_EQ(project_out(one, ket(2, {{2, 1, 1}})), ket(2, {{2, 1, 1}}));
  const StateVector a = ket(3, {{1, 1, 1}, {2, 2, 1}});
  const StateVector b = ket(3, {{1, 2, 1}, {2, 1, 1}});
  const std::vector<StateVector> sum{a + b};
  const StateVector r = project_out(sum, a);
  EXPECT_EQ(r, (a - b).scaled(Rational(1, 2)));
  EXPECT_EQ(inner_product(r, a + b), 0);
}

TEST(ProjectOut, DependentSpanThrows) {
  const StateVector s = ket(2, {{1, 1, 1}});
  EXPECT_THROW(project_out(std::vector<StateVector>{s, s.scaled(2)}, s), PreconditionError);
}

TEST(ProjectOut, IndependenceIffNonzeroResidualAndResidualOrthogonal) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    // Few distinct monomials so that dependence happens often.
    std::vector<StateVector> span;
    GramContext ctx;
    for (int k = 0; k < 3; ++k) {
      const StateVector s = random_state(2, 2, 2, rng);
      if (s.is_zero() || !ctx.is_independent(s)) continue;
      ctx = extend(std::move(ctx), s);
      span.push_back(s);
    }
    const StateVector v = random_state(2, 2, 3, rng);
    if (v.is_zero()) continue;
    const StateVector r = project_out(span, v);
    EXPECT_EQ(ctx.is_independent(v), !r.is_zero());
    for (const auto& s : span) EXPECT_EQ(inner_product(r, s), 0);
    EXPECT_EQ(ctx.project_out(v), r);
  }
}

}  // namespace
}  // namespace irrepforge
