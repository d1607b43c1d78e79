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

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "irrepforge/verify.hpp"

namespace {

struct Criterion {
  std::string id;
  std::string title;
  std::vector<std::string> scopes;
  double time_limit_s;
};

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 1;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);

  const std::vector<Criterion> criteria{
      {"C1", "dimension formula, 21 irreps", {"dimension"}, 60.0},
      {"C2", "weight multiplicities vs Gelfand-Tsetlin count", {"multiplicity"}, 0.0},
      {"C3", "lowering-operation bounds", {"bounds"}, 0.0},
      {"C4", "SU(2) Wigner D agreement", {"su2"}, 10.0},
      {"C5", "unitarity and homomorphism", {"unitarity", "homomorphism"}, 300.0},
      {"C6", "fundamental irrep equals V", {"fundamental"}, 0.0},
      {"C7", "canonical basis structure", {"structure"}, 0.0},
      {"C8", "lowering-word reachability", {"reachability"}, 0.0},
      {"C9", "symbolic and numeric D agree", {"symbolic"}, 0.0},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    bool passed = true;
    std::size_t checks = 0;
    std::string first_failure;
    try {
      for (const auto& scope : c.scopes) {
        const auto report = irrepforge::run_verification(scope, seed);
        checks += report.checks.size();
        for (const auto& r : report.checks) {
          if (!r.passed && first_failure.empty()) first_failure = r.name + " (" + r.measured + ")";
        }
        passed = passed && report.passed();
      }
    } catch (const std::exception& e) {
      passed = false;
      first_failure = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string detail = std::to_string(checks) + " checks, " + std::to_string(elapsed) + " s";
    if (c.time_limit_s > 0.0 && elapsed > c.time_limit_s) {
      passed = false;
      detail += " exceeds " + std::to_string(c.time_limit_s) + " s";
    }
    if (!first_failure.empty()) detail += "; first failure: " + first_failure;
    std::printf("[%s] %s %s: %s\n", passed ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(), detail.c_str());
    if (!passed) ++failed;
  }
  std::printf("%d/%zu criteria passed (seed %llu)\n", static_cast<int>(criteria.size()) - failed, criteria.size(),
              static_cast<unsigned long long>(seed));
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
