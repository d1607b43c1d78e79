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

#include "irrepforge/gt.hpp"

#include <numeric>

#include "irrepforge/errors.hpp"

namespace irrepforge {
namespace {

int row_sum(const GTPattern& p, int level) {
  if (level <= 0) return 0;
  const auto& r = p.row(level);
  return std::accumulate(r.begin(), r.end(), 0);
}

void extend_patterns(std::vector<std::vector<int>>& rows, std::vector<GTPattern>& out) {
  const std::vector<int> parent = rows.back();
  if (parent.size() == 1) {
    out.push_back({rows});
    return;
  }
  const std::size_t len = parent.size() - 1;
  std::vector<int> child(len);
  // Odometer over m_{k+1,ℓ} <= child_k <= m_{k,ℓ}.
  for (std::size_t k = 0; k < len; ++k) child[k] = parent[k + 1];
  while (true) {
    rows.push_back(child);
    extend_patterns(rows, out);
    rows.pop_back();
    std::size_t k = len;
    while (k > 0) {
      --k;
      if (child[k] < parent[k]) {
        ++child[k];
        for (std::size_t r = k + 1; r < len; ++r) child[r] = parent[r + 1];
        break;
      }
      if (k == 0) return;
    }
  }
}

}  // namespace

void check_pattern(const GTPattern& p) {
  const int n = p.n();
  if (n < 1) throw InvalidArgument("empty GT pattern");
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(p.rows[r].size()) != n - r) throw InvalidArgument("malformed GT pattern rows");
  }
  for (int r = 0; r + 1 < n; ++r) {
    const auto& upper = p.rows[r];
    const auto& lower = p.rows[r + 1];
    for (std::size_t k = 0; k < lower.size(); ++k) {
      if (!(upper[k] >= lower[k] && lower[k] >= upper[k + 1])) {
        throw InvalidArgument("GT pattern violates betweenness");
      }
    }
  }
}

GTPattern gt_pattern(const CanonicalLabel& label, const StateVector& state) {
  const int n = label.n();
  if (n != state.n()) throw InvalidArgument("label and state disagree on n");
  const auto nu = site_occupations(state);
  if (!nu) throw InvalidArgument("state has no well-defined site occupations");
  GTPattern p;
  int sigma = std::accumulate(nu->begin(), nu->end(), 0);
  for (int level = n; level >= 1; --level) {
    if (level < n) sigma -= (*nu)[level];
    if (level == 1) {
      p.rows.push_back({sigma});
      break;
    }
    auto it = label.irreps.find(level);
    if (it == label.irreps.end() || static_cast<int>(it->second.size()) != level - 1) {
      throw InvalidArgument("label lacks K^(" + std::to_string(level) + ")");
    }
    const auto& kappa = it->second;
    int weighted = 0;
    for (int j = 1; j < level; ++j) weighted += j * kappa[j - 1];
    if ((sigma - weighted) % level != 0) {
      throw InvalidArgument("label and occupations give a non-integral GT row");
    }
    std::vector<int> row(level);
    row[level - 1] = (sigma - weighted) / level;
    for (int k = level - 2; k >= 0; --k) row[k] = row[k + 1] + kappa[k];
    p.rows.push_back(std::move(row));
  }
  check_pattern(p);
  return p;
}

Rational gt_weight(const GTPattern& p, int level) {
  check_pattern(p);
  if (level < 1 || level >= p.n()) throw InvalidArgument("GT weight level outside 1..n-1");
  Rational w(2 * row_sum(p, level) - row_sum(p, level + 1) - row_sum(p, level - 1), 2);
  w.canonicalize();
  return w;
}

Weight gt_boson_weight(const GTPattern& p) {
  Weight w(p.n() - 1);
  for (int l = 1; l < p.n(); ++l) {
    Rational twice = 2 * gt_weight(p, l);
    twice.canonicalize();
    w[l - 1] = static_cast<int>(twice.get_num().get_si());
  }
  return w;
}

std::vector<int> gt_site_occupations(const GTPattern& p) {
  check_pattern(p);
  std::vector<int> nu(p.n());
  for (int l = 1; l <= p.n(); ++l) nu[l - 1] = row_sum(p, l) - row_sum(p, l - 1);
  return nu;
}

std::vector<int> gt_top_row(const IrrepLabel& K) {
  const int n = K.rank() + 1;
  std::vector<int> top(n, 0);
  for (int k = n - 2; k >= 0; --k) top[k] = top[k + 1] + K[k];
  return top;
}

std::vector<GTPattern> enumerate_gt_patterns(const IrrepLabel& K) {
  std::vector<std::vector<int>> rows{gt_top_row(K)};
  std::vector<GTPattern> out;
  extend_patterns(rows, out);
  return out;
}

}  // namespace irrepforge
