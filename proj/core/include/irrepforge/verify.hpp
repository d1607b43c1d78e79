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

#ifndef IRREPFORGE_VERIFY_HPP
#define IRREPFORGE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "irrepforge/basis_enum.hpp"

namespace irrepforge {

struct SuiteIrrep {
  int n = 0;
  IrrepLabel K;
};

/// Irreps exercised by the dimension, bounds and structure checks.
const std::vector<SuiteIrrep>& dimension_suite();
/// Irreps exercised by the unitarity, homomorphism and symbolic checks.
const std::vector<SuiteIrrep>& unitary_suite();

struct CheckResult {
  std::string scope;
  std::string name;
  bool passed = false;
  std::string measured;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// "all" followed by the individual scopes.
const std::vector<std::string>& verify_scopes();

/// Runs one scope (or all). Randomized checks draw from a generator seeded
/// with `seed`; the report is a pure function of (scope, seed).
/// Throws InvalidArgument for an unknown scope.
VerifyReport run_verification(std::string_view scope, std::uint64_t seed);

}  // namespace irrepforge

#endif  // IRREPFORGE_VERIFY_HPP
