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

#include "irrepforge/dfunc.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include <boost/functional/hash.hpp>

#include "irrepforge/errors.hpp"

namespace irrepforge {
namespace {

using Counts = boost::container::small_vector<std::uint8_t, 16>;

struct CountsHash {
  std::size_t operator()(const Counts& c) const { return boost::hash_range(c.begin(), c.end()); }
};

double factorial(int k) { return std::tgamma(k + 1.0); }

template <typename T>
T ipow(T z, int k) {
  T r = 1.0;
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

// Symbolic single-species overlaps ⟨μ| U(V) |ν⟩ between unnormalized
// occupation vectors, as polynomials in the entries of V:
//   Σ_T μ! Π_j ν_j! / Π_{k,j} T_{kj}!  Π V_{kj}^{T_{kj}}
// over non-negative tables T with row sums μ and column sums ν.
class OverlapCache {
 public:
  explicit OverlapCache(int n) : n_(n) {}

  const VPolynomial& get(const Counts& out, const Counts& in) {
    Counts key = out;
    key.insert(key.end(), in.begin(), in.end());
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(std::move(key), compute(out, in)).first->second;
  }

 private:
  VPolynomial compute(const Counts& out, const Counts& in) {
    VPolynomial result(n_);
    Integer prefactor = 1;
    for (int k = 0; k < n_; ++k) prefactor *= factorial_int(out[k]);
    for (int j = 0; j < n_; ++j) prefactor *= factorial_int(in[j]);
    std::vector<int> remaining(out.begin(), out.end());
    VExponent exponent(static_cast<std::size_t>(n_) * n_, 0);
    fill_column(0, 0, in, remaining, exponent, Integer(1), prefactor, result);
    return result;
  }

  // Distributes the in[j] bosons of column j over rows k, row by row.
  void fill_column(int j, int k, const Counts& in, std::vector<int>& remaining, VExponent& exponent,
                   const Integer& denominator, const Integer& prefactor, VPolynomial& result) {
    if (j == n_) {
      result.add_term(exponent, Rational(prefactor, denominator));
      return;
    }
    int placed = 0;
    for (int r = 0; r < k; ++r) placed += exponent[static_cast<std::size_t>(r) * n_ + j];
    const int left = in[j] - placed;
    if (k == n_ - 1) {
      if (left > remaining[k]) return;
      exponent[static_cast<std::size_t>(k) * n_ + j] = static_cast<std::uint8_t>(left);
      remaining[k] -= left;
      fill_column(j + 1, 0, in, remaining, exponent, denominator * factorial_int(left), prefactor, result);
      remaining[k] += left;
      exponent[static_cast<std::size_t>(k) * n_ + j] = 0;
      return;
    }
    const int cap = std::min(left, remaining[k]);
    for (int t = 0; t <= cap; ++t) {
      exponent[static_cast<std::size_t>(k) * n_ + j] = static_cast<std::uint8_t>(t);
      remaining[k] -= t;
      fill_column(j, k + 1, in, remaining, exponent, denominator * factorial_int(t), prefactor, result);
      remaining[k] += t;
    }
    exponent[static_cast<std::size_t>(k) * n_ + j] = 0;
  }

  static Integer factorial_int(int k) {
    Integer f = 1;
    for (int x = 2; x <= k; ++x) f *= x;
    return f;
  }

  int n_;
  std::unordered_map<Counts, VPolynomial, CountsHash> cache_;
};

Counts species_column(const Monomial& m, int species) {
  Counts c(m.sites());
  for (int i = 0; i < m.sites(); ++i) c[i] = static_cast<std::uint8_t>(m.at(i, species));
  return c;
}

VPolynomial symbolic_overlap(const StateVector& row, const StateVector& col, OverlapCache& cache) {
  const int n = row.n();
  VPolynomial total(n);
  for (const auto& tr : row.terms()) {
    for (const auto& tc : col.terms()) {
      bool compatible = true;
      for (int s = 0; s < n - 1 && compatible; ++s) {
        compatible = tr.monomial.species_total(s) == tc.monomial.species_total(s);
      }
      if (!compatible) continue;
      VPolynomial product = VPolynomial::constant(n, tr.coeff * tc.coeff);
      for (int s = 0; s < n - 1 && !product.is_zero(); ++s) {
        product = product * cache.get(species_column(tr.monomial, s), species_column(tc.monomial, s));
      }
      total += product;
    }
  }
  return total;
}

const CanonicalState& find_state(const CanonicalBasis& basis, const CanonicalLabel& label) {
  auto idx = basis.index_of(label);
  if (!idx) throw InvalidArgument("label not found in the irrep");
  return basis.states[*idx];
}

bool same_top_irrep(const CanonicalLabel& a, const CanonicalLabel& b) {
  return a.n() == b.n() && a.irreps.begin()->second == b.irreps.begin()->second;
}

void check_matrix(int n, const ComplexMatrix& V) {
  if (V.rows() != n || V.cols() != n) throw InvalidArgument("unitary has the wrong dimension");
}

// Fock-weighted overlap Σ_μ row_μ μ! S_μ against a substituted column.
std::complex<double> numeric_overlap(const StateVector& row, const NumericState& transformed) {
  std::complex<double> total = 0.0;
  auto it = transformed.terms.begin();
  for (const auto& t : row.terms()) {
    it = std::lower_bound(it, transformed.terms.end(), t.monomial,
                          [](const auto& entry, const Monomial& m) { return entry.first < m; });
    if (it == transformed.terms.end()) break;
    if (it->first == t.monomial) {
      total += it->second * (t.coeff.get_d() * t.monomial.factorial_weight().get_d());
    }
  }
  return total;
}

double inverse_norm(const Rational& row_sq, const Rational& col_sq) {
  return 1.0 / std::sqrt(Rational(row_sq * col_sq).get_d());
}

}  // namespace

ComplexMatrix su2_block(double alpha, double beta, double gamma) {
  using namespace std::complex_literals;
  ComplexMatrix b(2, 2);
  const double c = std::cos(beta / 2);
  const double s = std::sin(beta / 2);
  b(0, 0) = std::exp(-0.5i * (alpha + gamma)) * c;
  b(0, 1) = -std::exp(-0.5i * (alpha - gamma)) * s;
  b(1, 0) = std::exp(0.5i * (alpha - gamma)) * s;
  b(1, 1) = std::exp(0.5i * (alpha + gamma)) * c;
  return b;
}

ComplexMatrix build_unitary(int n, std::span<const EulerFactor> factors) {
  if (n < 2) throw InvalidArgument("n must be at least 2");
  ComplexMatrix V = ComplexMatrix::Identity(n, n);
  for (const auto& f : factors) {
    if (f.mode < 1 || f.mode > n - 1) {
      throw InvalidArgument("Euler factor mode " + std::to_string(f.mode) + " outside 1..n-1");
    }
    ComplexMatrix F = ComplexMatrix::Identity(n, n);
    F.block(f.mode - 1, f.mode - 1, 2, 2) = su2_block(f.alpha, f.beta, f.gamma);
    V = V * F;
  }
  return V;
}

ComplexMatrix resolve_unitary(int n, const UnitaryInput& input) {
  if (const auto* factors = std::get_if<std::vector<EulerFactor>>(&input)) {
    return build_unitary(n, *factors);
  }
  const auto& V = std::get<ComplexMatrix>(input);
  check_matrix(n, V);
  const double deviation = (V.adjoint() * V - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (deviation > kUnitarityTolerance) throw InvalidArgument("matrix is not unitary");
  if (std::abs(V.determinant() - 1.0) > kUnitarityTolerance) {
    throw InvalidArgument("matrix does not have unit determinant");
  }
  return V;
}

ComplexMatrix random_special_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix Z(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) Z(i, j) = {gauss(rng), gauss(rng)};
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(Z);
  ComplexMatrix Q = qr.householderQ();
  const ComplexMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) Q.col(j) *= R(j, j) / std::abs(R(j, j));
  const std::complex<double> det = Q.determinant();
  return Q * std::pow(det, -1.0 / n);
}

std::complex<double> DPolynomial::evaluate(const ComplexMatrix& V) const {
  if (poly.is_zero()) return 0.0;
  return poly.evaluate(V) / std::sqrt(scale_sq.get_d());
}

DPolynomial d_function_symbolic(const CanonicalBasis& basis, const CanonicalLabel& row,
                                const CanonicalLabel& col) {
  const auto& r = find_state(basis, row);
  const auto& c = find_state(basis, col);
  OverlapCache cache(basis.n);
  return {basis.n, r.state.norm_sq() * c.state.norm_sq(), symbolic_overlap(r.state, c.state, cache)};
}

std::complex<double> d_function(const CanonicalBasis& basis, const CanonicalLabel& row,
                                const CanonicalLabel& col, const ComplexMatrix& V) {
  check_matrix(basis.n, V);
  const auto& r = find_state(basis, row);
  const auto& c = find_state(basis, col);
  const NumericState transformed = substitute(c.state, ComplexMatrix(V.transpose()));
  return numeric_overlap(r.state, transformed) * inverse_norm(r.state.norm_sq(), c.state.norm_sq());
}

DPolynomial d_function_symbolic(int n, const CanonicalLabel& row, const CanonicalLabel& col,
                                const SubalgebraChain& chain) {
  if (row.n() != n || col.n() != n) throw InvalidArgument("label does not belong to su(n)");
  if (!same_top_irrep(row, col)) return {n, 1, VPolynomial(n)};
  const auto basis = canonical_basis(n, IrrepLabel(row.irreps.at(n)), chain);
  return d_function_symbolic(basis, row, col);
}

std::complex<double> d_function(int n, const CanonicalLabel& row, const CanonicalLabel& col,
                                const UnitaryInput& V, const SubalgebraChain& chain) {
  const ComplexMatrix U = resolve_unitary(n, V);
  if (row.n() != n || col.n() != n) throw InvalidArgument("label does not belong to su(n)");
  if (!same_top_irrep(row, col)) return 0.0;
  const auto basis = canonical_basis(n, IrrepLabel(row.irreps.at(n)), chain);
  return d_function(basis, row, col, U);
}

ComplexMatrix d_matrix(const CanonicalBasis& basis, const ComplexMatrix& V) {
  check_matrix(basis.n, V);
  const auto dim = static_cast<Eigen::Index>(basis.size());
  const ComplexMatrix W = V.transpose();
  std::vector<Rational> norms;
  for (const auto& s : basis.states) norms.push_back(s.state.norm_sq());
  ComplexMatrix D(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    const NumericState transformed = substitute(basis.states[c].state, W);
    for (Eigen::Index r = 0; r < dim; ++r) {
      D(r, c) = numeric_overlap(basis.states[r].state, transformed) * inverse_norm(norms[r], norms[c]);
    }
  }
  return D;
}

ComplexMatrix d_matrix(int n, const IrrepLabel& K, const UnitaryInput& V, const SubalgebraChain& chain) {
  const ComplexMatrix U = resolve_unitary(n, V);
  return d_matrix(canonical_basis(n, K, chain), U);
}

std::vector<std::vector<DPolynomial>> d_matrix_symbolic(const CanonicalBasis& basis) {
  OverlapCache cache(basis.n);
  std::vector<Rational> norms;
  for (const auto& s : basis.states) norms.push_back(s.state.norm_sq());
  std::vector<std::vector<DPolynomial>> D(basis.size(), std::vector<DPolynomial>(basis.size()));
  for (std::size_t r = 0; r < basis.size(); ++r) {
    for (std::size_t c = 0; c < basis.size(); ++c) {
      D[r][c] = {basis.n, norms[r] * norms[c],
                 symbolic_overlap(basis.states[r].state, basis.states[c].state, cache)};
    }
  }
  return D;
}

std::complex<double> su2_wigner_oracle(int two_j, int two_m_row, int two_m_col, double alpha,
                                       double beta, double gamma) {
  if (two_j < 0 || std::abs(two_m_row) > two_j || std::abs(two_m_col) > two_j ||
      (two_j - two_m_row) % 2 != 0 || (two_j - two_m_col) % 2 != 0) {
    throw InvalidArgument("invalid SU(2) quantum numbers");
  }
  // e^{-i m' alpha} d^j_{m'm}(beta) e^{-i m gamma}, summed in the Wigner form.
  const int jpm = (two_j + two_m_col) / 2;
  const int jmm = (two_j - two_m_col) / 2;
  const int jpmp = (two_j + two_m_row) / 2;
  const int jmmp = (two_j - two_m_row) / 2;
  const int dm = (two_m_row - two_m_col) / 2;
  const double c = std::cos(beta / 2);
  const double s = std::sin(beta / 2);
  const double norm = std::sqrt(factorial(jpmp) * factorial(jmmp) * factorial(jpm) * factorial(jmm));
  double d = 0.0;
  for (int k = std::max(0, -dm); k <= std::min(jpm, jmmp); ++k) {
    const double sign = (k + dm) % 2 == 0 ? 1.0 : -1.0;
    d += sign * norm / (factorial(jpm - k) * factorial(k) * factorial(jmmp - k) * factorial(k + dm)) *
         ipow(c, jpm + jmmp - 2 * k) * ipow(s, 2 * k + dm);
  }
  using namespace std::complex_literals;
  return std::exp(-0.5i * (two_m_row * alpha)) * d * std::exp(-0.5i * (two_m_col * gamma));
}

}  // namespace irrepforge
