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

#include "irrepforge/chain.hpp"

#include <algorithm>
#include <numeric>

#include "irrepforge/errors.hpp"

namespace irrepforge {

std::optional<std::string> validate_chain(int n, const std::vector<std::vector<int>>& levels) {
  if (n < 2) return "n must be at least 2";
  if (static_cast<int>(levels.size()) != n - 2) {
    return "expected " + std::to_string(n - 2) + " nested levels I^(" + std::to_string(n - 1) +
           ")..I^(2), got " + std::to_string(levels.size());
  }
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 1);
  for (std::size_t idx = 0; idx < levels.size(); ++idx) {
    const int m = n - 1 - static_cast<int>(idx);
    const auto& level = levels[idx];
    const std::string name = "I^(" + std::to_string(m) + ")";
    if (static_cast<int>(level.size()) != m) {
      return name + " must have " + std::to_string(m) + " entries";
    }
    for (std::size_t a = 0; a < level.size(); ++a) {
      if (level[a] < 1 || level[a] > n) {
        return name + " entry " + std::to_string(level[a]) + " outside 1.." + std::to_string(n);
      }
      if (a > 0 && level[a] <= level[a - 1]) return name + " is not strictly increasing";
    }
    for (int i : level) {
      if (!std::binary_search(parent.begin(), parent.end(), i)) {
        return name + " is not contained in I^(" + std::to_string(m + 1) + ")";
      }
    }
    parent = level;
  }
  return std::nullopt;
}

SubalgebraChain SubalgebraChain::canonical(int n) {
  std::vector<std::vector<int>> levels;
  for (int m = n - 1; m >= 2; --m) {
    std::vector<int> level(m);
    std::iota(level.begin(), level.end(), 1);
    levels.push_back(std::move(level));
  }
  return from_levels(n, std::move(levels));
}

SubalgebraChain SubalgebraChain::from_levels(int n, std::vector<std::vector<int>> levels) {
  if (auto violation = validate_chain(n, levels)) throw InvalidArgument("invalid chain: " + *violation);
  SubalgebraChain chain;
  chain.n_ = n;
  chain.by_level_.resize(n + 1);
  chain.by_level_[n].resize(n);
  std::iota(chain.by_level_[n].begin(), chain.by_level_[n].end(), 1);
  for (std::size_t idx = 0; idx < levels.size(); ++idx) {
    chain.by_level_[n - 1 - idx] = std::move(levels[idx]);
  }
  return chain;
}

std::span<const int> SubalgebraChain::indices(int m) const {
  if (m < 2 || m > n_) throw InvalidArgument("chain level " + std::to_string(m) + " outside 2..n");
  return by_level_[m];
}

std::vector<std::vector<int>> SubalgebraChain::levels() const {
  std::vector<std::vector<int>> out;
  for (int m = n_ - 1; m >= 2; --m) out.push_back(by_level_[m]);
  return out;
}

bool SubalgebraChain::is_canonical() const { return *this == canonical(n_); }

}  // namespace irrepforge
