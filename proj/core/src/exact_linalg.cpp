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

#include "irrepforge/exact_linalg.hpp"

#include "irrepforge/errors.hpp"

namespace irrepforge {

void GramContext::check_same_n(const StateVector& v) const {
  if (!basis_.empty() && basis_.front().n() != v.n()) {
    throw InvalidArgument("site-count mismatch with Gram context");
  }
}

GramContext::Solve GramContext::solve(const StateVector& v) const {
  const std::size_t k = basis_.size();
  Solve out;
  out.overlaps.resize(k);
  out.forward.resize(k);
  for (std::size_t a = 0; a < k; ++a) out.overlaps[a] = inner_product(basis_[a], v);
  for (std::size_t a = 0; a < k; ++a) {
    Rational y = out.overlaps[a];
    for (std::size_t c = 0; c < a; ++c) y -= lower_[a][c] * out.forward[c];
    out.forward[a] = y;
  }
  out.schur = v.norm_sq();
  for (std::size_t a = 0; a < k; ++a) out.schur -= out.forward[a] * out.forward[a] / diag_[a];
  return out;
}

bool GramContext::is_independent(const StateVector& candidate) const {
  check_same_n(candidate);
  if (candidate.is_zero()) return false;
  return sgn(solve(candidate).schur) != 0;
}

StateVector GramContext::project_out(const StateVector& v) const {
  check_same_n(v);
  if (basis_.empty() || v.is_zero()) return v;
  const std::size_t k = basis_.size();
  Solve s = solve(v);
  // Back substitution Lᵀ x = D⁻¹ y.
  std::vector<Rational> x(k);
  for (std::size_t a = k; a-- > 0;) {
    Rational value = s.forward[a] / diag_[a];
    for (std::size_t c = a + 1; c < k; ++c) value -= lower_[c][a] * x[c];
    x[a] = value;
  }
  StateBuilder out(v.n());
  out.add(v);
  for (std::size_t a = 0; a < k; ++a) {
    if (sgn(x[a]) != 0) out.add(basis_[a], -x[a]);
  }
  return std::move(out).build();
}

GramContext extend(GramContext ctx, StateVector candidate) {
  ctx.check_same_n(candidate);
  if (candidate.is_zero()) throw PreconditionError("cannot extend with the zero state");
  auto s = ctx.solve(candidate);
  if (sgn(s.schur) == 0) throw PreconditionError("candidate is linearly dependent on the context");

  const std::size_t k = ctx.basis_.size();
  std::vector<Rational> row(k);
  for (std::size_t a = 0; a < k; ++a) row[a] = s.forward[a] / ctx.diag_[a];
  ctx.lower_.push_back(std::move(row));
  ctx.diag_.push_back(s.schur);

  for (std::size_t a = 0; a < k; ++a) ctx.gram_[a].push_back(s.overlaps[a]);
  s.overlaps.push_back(candidate.norm_sq());
  ctx.gram_.push_back(std::move(s.overlaps));
  ctx.basis_.push_back(std::move(candidate));
  return ctx;
}

bool is_independent(const GramContext& ctx, const StateVector& candidate) {
  return ctx.is_independent(candidate);
}

StateVector project_out(std::span<const StateVector> span, const StateVector& v) {
  GramContext ctx;
  for (const auto& s : span) ctx = extend(std::move(ctx), s);
  return ctx.project_out(v);
}

}  // namespace irrepforge
