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

#ifndef IRREPFORGE_TESTS_TEST_UTIL_HPP
#define IRREPFORGE_TESTS_TEST_UTIL_HPP

#include <array>
#include <initializer_list>
#include <random>

#include "irrepforge/boson_algebra.hpp"

namespace irrepforge::testing {

/// (site, species, power), all 1-based.
using Factor = std::array<int, 3>;

inline StateVector ket(int n, std::initializer_list<Factor> factors, Rational coeff = 1) {
  Monomial m(n, n - 1);
  for (const auto& [site, species, power] : factors) m.add(site - 1, species - 1, power);
  return StateVector::from_monomial(n, m, coeff);
}

/// Random homogeneous state with up to `terms` monomials of the given degree
/// and small integer coefficients.
inline StateVector random_state(int n, int degree, int terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> site(0, n - 1);
  std::uniform_int_distribution<int> species(0, n - 2);
  std::uniform_int_distribution<int> coeff(-3, 3);
  StateBuilder b(n);
  for (int t = 0; t < terms; ++t) {
    Monomial m(n, n - 1);
    for (int d = 0; d < degree; ++d) m.add(site(rng), species(rng), 1);
    b.add(m, coeff(rng));
  }
  return std::move(b).build();
}

}  // namespace irrepforge::testing

#endif  // IRREPFORGE_TESTS_TEST_UTIL_HPP
