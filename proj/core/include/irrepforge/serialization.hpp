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

#ifndef IRREPFORGE_SERIALIZATION_HPP
#define IRREPFORGE_SERIALIZATION_HPP

#include <nlohmann/json.hpp>

#include "irrepforge/basis_enum.hpp"
#include "irrepforge/boson_algebra.hpp"
#include "irrepforge/canonical.hpp"
#include "irrepforge/dfunc.hpp"
#include "irrepforge/gt.hpp"

namespace irrepforge {

using Json = nlohmann::json;

/// {"num": "...", "den": "..."} with decimal strings.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

void to_json(Json& j, const StateVector& s);
void from_json(const Json& j, StateVector& s);

void to_json(Json& j, const VertexTable& t);
void from_json(const Json& j, VertexTable& t);

void to_json(Json& j, const CanonicalLabel& l);
void from_json(const Json& j, CanonicalLabel& l);

void to_json(Json& j, const GTPattern& p);
void from_json(const Json& j, GTPattern& p);

void to_json(Json& j, const DPolynomial& d);
void from_json(const Json& j, DPolynomial& d);

void to_json(Json& j, const CanonicalState& s);
void from_json(const Json& j, CanonicalState& s);

/// Row-major nested arrays of [re, im] pairs.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

/// States (with labels and GT patterns), chain levels and per-run operation
/// counts of a canonical basis.
Json canonical_basis_to_json(const CanonicalBasis& basis);

}  // namespace irrepforge

#endif  // IRREPFORGE_SERIALIZATION_HPP
