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

#ifndef IRREPFORGE_DFUNC_HPP
#define IRREPFORGE_DFUNC_HPP

#include <complex>
#include <random>
#include <span>
#include <variant>
#include <vector>

#include "irrepforge/boson_algebra.hpp"
#include "irrepforge/canonical.hpp"
#include "irrepforge/chain.hpp"
#include "irrepforge/polynomial.hpp"

namespace irrepforge {

/// One 2x2 SU(2) block
///   [ e^{-i(α+γ)/2} cos β/2   -e^{-i(α-γ)/2} sin β/2 ]
///   [ e^{ i(α-γ)/2} sin β/2    e^{ i(α+γ)/2} cos β/2 ]
/// acting on modes (mode, mode+1), 1-based.
struct EulerFactor {
  int mode = 1;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/// Either an explicit n x n unitary or a list of Euler factors.
using UnitaryInput = std::variant<ComplexMatrix, std::vector<EulerFactor>>;

inline constexpr double kUnitarityTolerance = 1e-10;

/// The 2x2 block above.
ComplexMatrix su2_block(double alpha, double beta, double gamma);

/// Product F_1 F_2 ⋯ F_k (list order) of identity matrices with the Euler
/// blocks embedded on their modes.
ComplexMatrix build_unitary(int n, std::span<const EulerFactor> factors);

/// Materializes and validates: ‖V†V - I‖_max <= 1e-10 and |det V - 1| <= 1e-10.
ComplexMatrix resolve_unitary(int n, const UnitaryInput& input);

/// Haar-distributed element of SU(n).
ComplexMatrix random_special_unitary(int n, std::mt19937_64& rng);

/// Symbolic D-function: Σ coeff Π V_{ik}^{e_{ik}}, scaled by 1/√scale_sq.
struct DPolynomial {
  int n = 0;
  Rational scale_sq = 1;
  VPolynomial poly;

  std::complex<double> evaluate(const ComplexMatrix& V) const;
  friend bool operator==(const DPolynomial&, const DPolynomial&) = default;
};

/// D-functions are ⟨row| U(V) |col⟩ where U(V) maps a†_{j,s} to
/// Σ_k V_{kj} a†_{k,s}, so that V ↦ D(V) is a homomorphism and the
/// fundamental irrep reproduces V itself.
DPolynomial d_function_symbolic(const CanonicalBasis& basis, const CanonicalLabel& row,
                                const CanonicalLabel& col);
std::complex<double> d_function(const CanonicalBasis& basis, const CanonicalLabel& row,
                                const CanonicalLabel& col, const ComplexMatrix& V);

/// Label-only entry points. Return 0 without building states when the top
/// irrep labels of row and column differ.
DPolynomial d_function_symbolic(int n, const CanonicalLabel& row, const CanonicalLabel& col,
                                const SubalgebraChain& chain);
std::complex<double> d_function(int n, const CanonicalLabel& row, const CanonicalLabel& col,
                                const UnitaryInput& V, const SubalgebraChain& chain);

/// Full Δ_K x Δ_K matrix over the canonical ordering.
ComplexMatrix d_matrix(const CanonicalBasis& basis, const ComplexMatrix& V);
ComplexMatrix d_matrix(int n, const IrrepLabel& K, const UnitaryInput& V, const SubalgebraChain& chain);
std::vector<std::vector<DPolynomial>> d_matrix_symbolic(const CanonicalBasis& basis);

/// SU(2) D^J_{M'M}(α,β,γ) = e^{-iM'α} d^J_{M'M}(β) e^{-iMγ} from the Wigner
/// small-d sum, in the same convention as su2_block. Arguments are doubled:
/// two_j = 2J, two_m_row = 2M', two_m_col = 2M.
std::complex<double> su2_wigner_oracle(int two_j, int two_m_row, int two_m_col, double alpha,
                                       double beta, double gamma);

}  // namespace irrepforge

#endif  // IRREPFORGE_DFUNC_HPP
