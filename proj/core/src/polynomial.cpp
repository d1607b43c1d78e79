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

#include "irrepforge/polynomial.hpp"

#include <sstream>

#include "irrepforge/errors.hpp"

namespace irrepforge {

VPolynomial VPolynomial::constant(int n, const mpq_class& c) {
  VPolynomial p(n);
  p.add_term(VExponent(static_cast<std::size_t>(n) * n, 0), c);
  return p;
}

VPolynomial VPolynomial::symbol(int n, int i, int k) {
  if (i < 1 || i > n || k < 1 || k > n) {
    throw InvalidArgument("symbol index out of range");
  }
  VExponent e(static_cast<std::size_t>(n) * n, 0);
  e[static_cast<std::size_t>(i - 1) * n + (k - 1)] = 1;
  VPolynomial p(n);
  p.add_term(e, 1);
  return p;
}

void VPolynomial::add_term(const VExponent& exponent, const mpq_class& coeff) {
  if (sgn(coeff) == 0) return;
  mpq_class c = coeff;
  c.canonicalize();
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

VPolynomial& VPolynomial::operator+=(const VPolynomial& other) {
  if (n_ == 0) n_ = other.n_;
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

VPolynomial& VPolynomial::operator-=(const VPolynomial& other) {
  if (n_ == 0) n_ = other.n_;
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

VPolynomial& VPolynomial::operator*=(const mpq_class& factor) {
  if (sgn(factor) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= factor;
  return *this;
}

VPolynomial operator*(const VPolynomial& a, const VPolynomial& b) {
  VPolynomial out(a.n_ != 0 ? a.n_ : b.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      VExponent e = ea;
      for (std::size_t x = 0; x < e.size(); ++x) {
        e[x] = static_cast<std::uint8_t>(e[x] + eb[x]);
      }
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

int VPolynomial::homogeneous_degree() const {
  int degree = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (auto x : e) d += x;
    if (degree == -1) {
      degree = d;
    } else if (degree != d) {
      return -2;
    }
  }
  return degree;
}

std::complex<double> VPolynomial::evaluate(const Eigen::MatrixXcd& V) const {
  if (V.rows() != n_ || V.cols() != n_) {
    throw InvalidArgument("evaluation matrix has the wrong dimension");
  }
  std::complex<double> total = 0.0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> value = c.get_d();
    for (int i = 0; i < n_; ++i) {
      for (int k = 0; k < n_; ++k) {
        for (int p = 0; p < e[static_cast<std::size_t>(i) * n_ + k]; ++p) value *= V(i, k);
      }
    }
    total += value;
  }
  return total;
}

std::string VPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    mpq_class magnitude = abs(c);
    bool any = false;
    if (magnitude != 1) {
      os << magnitude.get_str();
      any = true;
    }
    for (int i = 0; i < n_; ++i) {
      for (int k = 0; k < n_; ++k) {
        int p = e[static_cast<std::size_t>(i) * n_ + k];
        if (p == 0) continue;
        os << (any ? "*" : "") << "V" << i + 1 << k + 1;
        if (p > 1) os << "^" << p;
        any = true;
      }
    }
    if (!any) os << "1";
    first = false;
  }
  return os.str();
}

}  // namespace irrepforge
