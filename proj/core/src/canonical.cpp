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

#include "irrepforge/canonical.hpp"

#include <algorithm>
#include <limits>

#include "irrepforge/errors.hpp"
#include "irrepforge/exact_linalg.hpp"

namespace irrepforge {
namespace {

// An su(m) irrep inside the parent irrep, with the chain of irrep labels
// K^(n), …, K^(m) that led to it.
struct Piece {
  VertexTable table;
  std::map<int, std::vector<int>, std::greater<>> irreps;
};

Weight must_weight(const StateVector& s, std::span<const int> sites) {
  auto w = weight_on(s, sites);
  if (!w) throw InternalError("state without a well-defined weight");
  return *w;
}

// Splits one su(m) irrep into its su(m-1) irreps.
std::vector<Piece> decompose(const Piece& piece, const SubalgebraChain& chain,
                             CanonicalBasis& out) {
  const int m = piece.table.level;
  const auto sites_m = chain.indices(m);
  const auto sites_sub = chain.indices(m - 1);
  const std::size_t total = piece.table.state_count();

  std::map<Weight, GramContext, std::greater<>> extracted;
  std::size_t extracted_count = 0;
  std::vector<Piece> children;

  while (extracted_count < total) {
    // Weight with the largest remaining multiplicity; ties go to the
    // greatest weight, which is the first one met in descending order.
    const Weight* best = nullptr;
    std::size_t best_remaining = 0;
    for (const auto& [w, states] : piece.table.vertices) {
      auto it = extracted.find(w);
      const std::size_t done = it == extracted.end() ? 0 : it->second.size();
      const std::size_t remaining = states.size() - done;
      if (remaining > best_remaining) {
        best_remaining = remaining;
        best = &w;
      }
    }
    if (best == nullptr) throw InternalError("remaining multiplicity vanished early");

    StateVector seed(chain.n());
    {
      auto it = extracted.find(*best);
      for (const auto& candidate : piece.table.vertices.at(*best)) {
        seed = it == extracted.end() ? candidate : it->second.project_out(candidate);
        if (!seed.is_zero()) break;
      }
    }
    if (seed.is_zero()) throw InternalError("no state left in the orthogonal complement");

    const RaiseResult raised = raise_to_hws(primitive_form(seed), m, chain);
    const StateVector sub_hws = primitive_form(raised.state);
    const Weight sub_label = must_weight(sub_hws, sites_sub);

    Piece child;
    child.table = basis_set(m - 1, sub_hws, chain);
    child.irreps = piece.irreps;
    child.irreps[m - 1] = sub_label;

    out.lowering_ops += child.table.lowering_ops;
    out.runs.push_back({m - 1, IrrepLabel(sub_label), child.table.state_count(),
                        child.table.lowering_ops});

    for (const auto& [w_sub, states] : child.table.vertices) {
      for (const auto& s : states) {
        auto& ctx = extracted[must_weight(s, sites_m)];
        ctx = extend(std::move(ctx), s);
        ++extracted_count;
      }
    }
    if (extracted_count > total) throw InternalError("extracted more states than the irrep holds");
    children.push_back(std::move(child));
  }
  return children;
}

}  // namespace

bool canonical_order(const CanonicalLabel& a, const CanonicalLabel& b) {
  const int n = a.n();
  auto wa = a.weights.find(n);
  auto wb = b.weights.find(n);
  if (wa != a.weights.end() && wb != b.weights.end() && wa->second != wb->second) {
    return wa->second > wb->second;
  }
  for (int m = n - 1; m >= 2; --m) {
    const auto& ka = a.irreps.at(m);
    const auto& kb = b.irreps.at(m);
    if (ka != kb) return ka > kb;
    const auto& la = a.weights.at(m);
    const auto& lb = b.weights.at(m);
    if (la != lb) return la > lb;
  }
  return false;
}

std::optional<std::size_t> CanonicalBasis::index_of(const CanonicalLabel& label) const {
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (states[k].label == label) return k;
  }
  return std::nullopt;
}

RaiseResult raise_to_hws(const StateVector& s, int m, const SubalgebraChain& chain) {
  if (s.is_zero()) throw InvalidArgument("cannot raise the zero state");
  if (!weight_on(s, chain.indices(m))) throw InvalidArgument("state has no well-defined weight");
  RaiseResult result{s, {}};
  if (m <= 2) return result;
  const auto raising = generator_set(chain, m - 1, GeneratorKind::kRaising);
  for (bool progressed = true; progressed;) {
    progressed = false;
    for (const auto& op : raising) {
      StateVector next = apply(op, result.state);
      if (next.is_zero()) continue;
      result.state = std::move(next);
      result.ops.push_back(op);
      progressed = true;
      break;
    }
  }
  return result;
}

Rational simple_raising_overlap(const StateVector& s, const StateVector& hws) {
  if (s.n() != hws.n()) throw InvalidArgument("site-count mismatch");
  const auto nu = site_occupations(s);
  const auto nu_top = site_occupations(hws);
  if (!nu || !nu_top) throw PreconditionError("state without well-defined site occupations");
  const int n = s.n();
  std::vector<int> powers(n - 1);
  int crossing = 0;
  for (int l = 0; l + 1 < n; ++l) {
    crossing += (*nu_top)[l] - (*nu)[l];
    if (crossing < 0) throw PreconditionError("state lies above the highest weight");
    powers[l] = crossing;
  }
  StateVector raised = s;
  for (int l = n - 1; l >= 1 && !raised.is_zero(); --l) {
    for (int p = 0; p < powers[l - 1] && !raised.is_zero(); ++p) raised = apply_transfer(l, l + 1, raised);
  }
  if (raised.is_zero()) return 0;
  return inner_product(hws, raised);
}

Rational phase_overlap(const StateVector& s, const StateVector& hws) {
  const Rational q = simple_raising_overlap(s, hws);
  if (sgn(q) != 0) return q;
  const auto nu_top = site_occupations(hws);
  StateVector raised = s;
  for (bool progressed = true; progressed && site_occupations(raised) != nu_top;) {
    progressed = false;
    for (int l = 1; l < s.n(); ++l) {
      StateVector next = apply_transfer(l, l + 1, raised);
      if (next.is_zero()) continue;
      raised = std::move(next);
      progressed = true;
      break;
    }
  }
  return inner_product(hws, raised);
}

StateVector fix_phase(const StateVector& s, const StateVector& irrep_hws) {
  const Rational q = phase_overlap(s, irrep_hws);
  if (sgn(q) == 0) throw InternalError("raising never reaches the highest weight state");
  return sgn(q) > 0 ? s : s.scaled(-1);
}

std::uint64_t dimension(int n, const IrrepLabel& K) {
  if (n < 2) throw InvalidArgument("n must be at least 2");
  if (K.rank() != n - 1) throw InvalidArgument("irrep label must have n-1 entries");
  Rational product = 1;
  for (int len = 1; len <= n - 1; ++len) {
    for (int start = 0; start + len <= n - 1; ++start) {
      int sum = 0;
      for (int a = start; a < start + len; ++a) sum += K[a];
      Rational factor(sum + len, len);
      factor.canonicalize();
      product *= factor;
    }
  }
  product.canonicalize();
  if (product.get_den() != 1) throw InternalError("dimension formula produced a fraction");
  const Integer value = product.get_num();
  if (value > Integer(std::to_string(std::numeric_limits<std::uint64_t>::max()))) {
    throw InvalidArgument("dimension does not fit in 64 bits");
  }
  return std::stoull(value.get_str());
}

CanonicalBasis canonical_basis(int n, const IrrepLabel& K, const SubalgebraChain& chain) {
  if (n < 2) throw InvalidArgument("n must be at least 2");
  if (K.rank() != n - 1) throw InvalidArgument("irrep label must have n-1 entries");
  if (chain.n() != n) throw InvalidArgument("chain was built for a different n");

  CanonicalBasis out;
  out.n = n;
  out.irrep = K;
  out.chain = chain;
  out.hws = primitive_form(build_hws(n, K));

  Piece top;
  top.table = basis_set(n, out.hws, chain);
  top.irreps[n] = K.values();
  out.lowering_ops += top.table.lowering_ops;
  out.runs.push_back({n, K, top.table.state_count(), top.table.lowering_ops});

  std::vector<Piece> pieces;
  pieces.push_back(std::move(top));
  for (int m = n; m >= 3; --m) {
    std::vector<Piece> next;
    for (const auto& piece : pieces) {
      auto children = decompose(piece, chain, out);
      for (auto& c : children) next.push_back(std::move(c));
    }
    pieces = std::move(next);
  }

  for (const auto& piece : pieces) {
    for (const auto& [w, states] : piece.table.vertices) {
      if (states.size() != 1) throw InternalError("su(2) weight space with multiplicity > 1");
      CanonicalState cs;
      cs.state = fix_phase(states.front(), out.hws);
      cs.label.irreps = piece.irreps;
      for (int m = n; m >= 2; --m) cs.label.weights[m] = must_weight(cs.state, chain.indices(m));
      out.states.push_back(std::move(cs));
    }
  }
  std::stable_sort(out.states.begin(), out.states.end(),
                   [](const CanonicalState& a, const CanonicalState& b) {
                     return canonical_order(a.label, b.label);
                   });
  return out;
}

}  // namespace irrepforge
