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

#ifndef IRREPFORGE_BOSON_ALGEBRA_HPP
#define IRREPFORGE_BOSON_ALGEBRA_HPP

// Polynomials in bosonic creation operators a†_{i,s} acting on the vacuum of
// an n-site system with n-1 internal species, and the action of the su(n)
// generators on them. Coefficients are exact rationals.
//
// Site and species indices in the public API are 1-based, matching the usual
// operator notation; Monomial accessors are 0-based.

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

#include "irrepforge/polynomial.hpp"

namespace irrepforge {

using Rational = mpq_class;
using Integer = mpz_class;
using Weight = std::vector<int>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Occupation matrix of one product of creation operators. Entry (i, s) is
/// the power of a†_{i+1,s+1}. Ordered row-major over (site, species).
class Monomial {
 public:
  using Count = std::uint8_t;

  Monomial() = default;
  Monomial(int sites, int species);

  /// Builds from a sites x species table of non-negative counts.
  static Monomial from_rows(const std::vector<std::vector<int>>& rows);

  int sites() const { return sites_; }
  int species() const { return species_; }
  int at(int site, int species) const { return occ_[index(site, species)]; }
  void set(int site, int species, int count);
  void add(int site, int species, int delta);

  int degree() const;
  int site_total(int site) const;
  int species_total(int species) const;
  std::vector<int> site_totals() const;

  /// Π ν_{i,s}!, the squared Fock norm of this monomial.
  Integer factorial_weight() const;

  std::span<const Count> flat() const { return {occ_.data(), occ_.size()}; }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.sites_ == b.sites_ && a.occ_ == b.occ_;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.occ_ < b.occ_; }

  std::size_t hash() const;

 private:
  std::size_t index(int site, int species) const {
    return static_cast<std::size_t>(site) * species_ + species;
  }

  int sites_ = 0;
  int species_ = 0;
  boost::container::small_vector<Count, 24> occ_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// A homogeneous-or-not polynomial in creation operators applied to |0⟩.
/// Terms are kept sorted by monomial and never carry a zero coefficient.
class StateVector {
 public:
  StateVector() = default;
  /// The zero state on n sites.
  explicit StateVector(int n);

  static StateVector vacuum(int n);
  static StateVector from_monomial(int n, Monomial m, Rational coeff = 1);
  /// Collects like terms, drops zeros and sorts. Throws on shape mismatch.
  static StateVector from_terms(int n, std::vector<Term> terms);

  int n() const { return n_; }
  int species() const { return n_ - 1; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }

  Rational coefficient(const Monomial& m) const;
  /// ⟨self|self⟩ under the Fock inner product.
  Rational norm_sq() const;

  StateVector scaled(const Rational& factor) const;

  friend StateVector operator+(const StateVector& a, const StateVector& b);
  friend StateVector operator-(const StateVector& a, const StateVector& b);
  friend bool operator==(const StateVector& a, const StateVector& b);

  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<Term> terms_;
};

/// Accumulates monomial contributions; build() yields a canonical StateVector.
class StateBuilder {
 public:
  explicit StateBuilder(int n) : n_(n) {}
  void add(const Monomial& m, const Rational& coeff);
  void add(const StateVector& s, const Rational& factor = 1);
  StateVector build() &&;

 private:
  int n_;
  std::map<Monomial, Rational> acc_;
};

/// A generator of u(n) in its boson realization.
///   transfer(i, j): c_{i,j} = Σ_s a†_{i,s} a_{j,s}, i ≠ j
///   cartan(i, j):   C_{i,i} - C_{j,j}, with cartan(i) = H_i = C_{i,i} - C_{i+1,i+1}
struct OperatorId {
  enum class Kind { kTransfer, kCartan };
  Kind kind = Kind::kTransfer;
  int i = 1;
  int j = 2;

  static OperatorId transfer(int i, int j) { return {Kind::kTransfer, i, j}; }
  static OperatorId cartan(int i) { return {Kind::kCartan, i, i + 1}; }
  static OperatorId cartan(int i, int j) { return {Kind::kCartan, i, j}; }

  friend bool operator==(const OperatorId&, const OperatorId&) = default;
  std::string to_string() const;
};

StateVector apply_transfer(int i, int j, const StateVector& s);
StateVector apply(const OperatorId& op, const StateVector& s);

/// Weight on the canonical level m: λ_a = ν_a - ν_{a+1}, a = 1..m-1.
/// nullopt when the monomials disagree. Throws on the zero state.
std::optional<Weight> weight(const StateVector& s, int m);
/// Weight with respect to an ordered site subset {i_1 < … < i_m}:
/// λ_a = ν_{i_a} - ν_{i_{a+1}}.
std::optional<Weight> weight_on(const StateVector& s, std::span<const int> sites);
/// Per-site boson totals shared by every monomial, or nullopt.
std::optional<std::vector<int>> site_occupations(const StateVector& s);

Rational inner_product(const StateVector& a, const StateVector& b);

/// Common total degree. Throws on inhomogeneous states.
int boson_count(const StateVector& s);

/// Rescales to coprime integer coefficients with a positive leading term.
StateVector primitive_form(const StateVector& s);

/// A state whose coefficients live in a ring other than the rationals,
/// produced by substituting a concrete or formal matrix.
template <typename Coeff>
struct TransformedState {
  int n = 0;
  std::vector<std::pair<Monomial, Coeff>> terms;  // sorted by monomial
};

using SymbolicState = TransformedState<VPolynomial>;
using NumericState = TransformedState<std::complex<double>>;

/// Replaces a†_{i,s} by Σ_k V_{ik} a†_{k,s} and expands.
SymbolicState substitute(const StateVector& s, const std::vector<std::vector<VPolynomial>>& V);
NumericState substitute(const StateVector& s, const ComplexMatrix& V);

/// Formal n x n matrix whose (i,k) entry is the symbol V_{ik}, or V_{ki}
/// when transposed.
std::vector<std::vector<VPolynomial>> formal_matrix(int n, bool transposed = false);

}  // namespace irrepforge

#endif  // IRREPFORGE_BOSON_ALGEBRA_HPP
