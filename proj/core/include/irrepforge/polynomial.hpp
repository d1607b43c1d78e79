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

#ifndef IRREPFORGE_POLYNOMIAL_HPP
#define IRREPFORGE_POLYNOMIAL_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

namespace irrepforge {

/// Exponent matrix over the n x n formal symbols V_{ik}, row-major.
using VExponent = boost::container::small_vector<std::uint8_t, 25>;

/// Sparse polynomial with rational coefficients in the entries V_{ik} of a
/// formal n x n matrix.
class VPolynomial {
 public:
  VPolynomial() = default;
  explicit VPolynomial(int n) : n_(n) {}

  static VPolynomial constant(int n, const mpq_class& c);
  /// The single symbol V_{ik} (1-based).
  static VPolynomial symbol(int n, int i, int k);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<VExponent, mpq_class>& terms() const { return terms_; }

  /// Adds coeff * Π V^exponent; zero results are erased.
  void add_term(const VExponent& exponent, const mpq_class& coeff);

  VPolynomial& operator+=(const VPolynomial& other);
  VPolynomial& operator-=(const VPolynomial& other);
  VPolynomial& operator*=(const mpq_class& factor);
  friend VPolynomial operator*(const VPolynomial& a, const VPolynomial& b);
  friend VPolynomial operator+(VPolynomial a, const VPolynomial& b) { return a += b; }
  friend VPolynomial operator-(VPolynomial a, const VPolynomial& b) { return a -= b; }
  friend bool operator==(const VPolynomial& a, const VPolynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// Degrees of all terms, or -1 for the zero polynomial; -2 if mixed.
  int homogeneous_degree() const;

  std::complex<double> evaluate(const Eigen::MatrixXcd& V) const;

  std::string to_string() const;

 private:
  int n_ = 0;
  std::map<VExponent, mpq_class> terms_;
};

}  // namespace irrepforge

#endif  // IRREPFORGE_POLYNOMIAL_HPP
