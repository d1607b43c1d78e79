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

#include "irrepforge/basis_enum.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "irrepforge/errors.hpp"
#include "irrepforge/exact_linalg.hpp"

namespace irrepforge {
namespace {

StateVector multiply(const StateVector& a, const StateVector& b) {
  StateBuilder out(a.n());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      Monomial m = ta.monomial;
      for (int i = 0; i < m.sites(); ++i) {
        for (int s = 0; s < m.species(); ++s) m.add(i, s, tb.monomial.at(i, s));
      }
      out.add(m, ta.coeff * tb.coeff);
    }
  }
  return std::move(out).build();
}

// Det of the k x k block a†_{r,s}, 1 <= r,s <= k, by Leibniz expansion.
StateVector leading_minor(int n, int k) {
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  StateBuilder out(n);
  do {
    int inversions = 0;
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) inversions += perm[a] > perm[b];
    }
    Monomial m(n, n - 1);
    for (int r = 0; r < k; ++r) m.add(r, perm[r], 1);
    out.add(m, inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::move(out).build();
}

}  // namespace

IrrepLabel::IrrepLabel(std::vector<int> kappa) : kappa_(std::move(kappa)) {
  for (int k : kappa_) {
    if (k < 0) throw InvalidArgument("irrep label entries must be non-negative");
  }
}

int IrrepLabel::boson_count() const {
  int total = 0;
  for (int a = 0; a < rank(); ++a) total += (a + 1) * kappa_[a];
  return total;
}

std::size_t VertexTable::state_count() const {
  std::size_t total = 0;
  for (const auto& [w, states] : vertices) total += states.size();
  return total;
}

std::size_t VertexTable::multiplicity(const Weight& w) const {
  auto it = vertices.find(w);
  return it == vertices.end() ? 0 : it->second.size();
}

std::vector<OperatorId> generator_set(const SubalgebraChain& chain, int m, GeneratorKind kind) {
  auto idx = chain.indices(m);
  std::vector<OperatorId> ops;
  if (kind == GeneratorKind::kCartan) {
    for (int a = 0; a + 1 < m; ++a) ops.push_back(OperatorId::cartan(idx[a], idx[a + 1]));
    return ops;
  }
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (kind == GeneratorKind::kRaising) {
        ops.push_back(OperatorId::transfer(idx[a], idx[b]));
      } else {
        ops.push_back(OperatorId::transfer(idx[b], idx[a]));
      }
    }
  }
  std::sort(ops.begin(), ops.end(), [](const OperatorId& x, const OperatorId& y) {
    return std::pair(x.i, x.j) < std::pair(y.i, y.j);
  });
  return ops;
}

StateVector build_hws(int n, const IrrepLabel& K) {
  if (n < 2) throw InvalidArgument("n must be at least 2");
  if (K.rank() != n - 1) throw InvalidArgument("irrep label must have n-1 entries");
  StateVector state = StateVector::vacuum(n);
  for (int k = n - 1; k >= 1; --k) {
    if (K[k - 1] == 0) continue;
    const StateVector minor = leading_minor(n, k);
    for (int p = 0; p < K[k - 1]; ++p) state = multiply(state, minor);
  }
  return state;
}

VertexTable basis_set(int m, const StateVector& hws, const SubalgebraChain& chain) {
  if (chain.n() != hws.n()) throw InvalidArgument("chain and state disagree on n");
  if (hws.is_zero()) throw PreconditionError("basis_set needs a nonzero highest-weight state");
  boson_count(hws);  // throws on inhomogeneous input
  const auto sites = chain.indices(m);
  const auto top_weight = weight_on(hws, sites);
  if (!top_weight) throw PreconditionError("highest-weight state has no well-defined weight");
  for (const auto& op : generator_set(chain, m, GeneratorKind::kRaising)) {
    if (!apply(op, hws).is_zero()) {
      throw PreconditionError("state is not annihilated by raising operator " + op.to_string());
    }
  }

  const auto lowering = generator_set(chain, m, GeneratorKind::kLowering);
  std::map<Weight, GramContext, std::greater<>> contexts;
  std::deque<StateVector> queue;
  VertexTable table;
  table.level = m;

  StateVector start = primitive_form(hws);
  contexts[*top_weight] = extend(GramContext{}, start);
  queue.push_back(std::move(start));

  while (!queue.empty()) {
    const StateVector current = std::move(queue.front());
    queue.pop_front();
    for (const auto& op : lowering) {
      StateVector lowered = apply(op, current);
      ++table.lowering_ops;
      if (lowered.is_zero()) continue;
      const auto w = weight_on(lowered, sites);
      if (!w) throw InternalError("lowering produced a state without a weight");
      auto it = contexts.find(*w);
      if (it != contexts.end() && !it->second.is_independent(lowered)) continue;
      StateVector kept = primitive_form(lowered);
      if (it == contexts.end()) {
        contexts.emplace(*w, extend(GramContext{}, kept));
      } else {
        it->second = extend(std::move(it->second), kept);
      }
      queue.push_back(std::move(kept));
    }
  }

  for (auto& [w, ctx] : contexts) {
    auto basis = ctx.basis();
    table.vertices.emplace(w, std::vector<StateVector>(basis.begin(), basis.end()));
  }
  return table;
}

}  // namespace irrepforge
