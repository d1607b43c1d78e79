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

#ifndef IRREPFORGE_CHAIN_HPP
#define IRREPFORGE_CHAIN_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace irrepforge {

/// Nested site subsets I^(n) ⊃ I^(n-1) ⊃ … ⊃ I^(2) selecting the su(m)
/// subalgebras. I^(n) = {1..n} is implicit.
class SubalgebraChain {
 public:
  SubalgebraChain() = default;

  /// su(n) ⊃ su(n-1) ⊃ … with I^(m) = {1..m}.
  static SubalgebraChain canonical(int n);

  /// levels = {I^(n-1), I^(n-2), …, I^(2)}. Throws InvalidArgument with the
  /// first violated condition.
  static SubalgebraChain from_levels(int n, std::vector<std::vector<int>> levels);

  int n() const { return n_; }
  /// I^(m) for 2 <= m <= n.
  std::span<const int> indices(int m) const;
  /// {I^(n-1), …, I^(2)} as given to from_levels.
  std::vector<std::vector<int>> levels() const;
  bool is_canonical() const;

  friend bool operator==(const SubalgebraChain&, const SubalgebraChain&) = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> by_level_;  // by_level_[m] = I^(m); entries 0,1 unused
};

/// Checks sizes, ranges, strict ordering and nesting of {I^(n-1), …, I^(2)}.
/// Returns nullopt when valid, else a description of the first violation.
std::optional<std::string> validate_chain(int n, const std::vector<std::vector<int>>& levels);

}  // namespace irrepforge

#endif  // IRREPFORGE_CHAIN_HPP
