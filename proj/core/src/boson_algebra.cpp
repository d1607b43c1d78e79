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

#include "irrepforge/boson_algebra.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <boost/functional/hash.hpp>

#include "irrepforge/errors.hpp"

namespace irrepforge {
namespace {

constexpr int kMaxCount = std::numeric_limits<Monomial::Count>::max();

const std::vector<Integer>& factorial_table() {
  static const std::vector<Integer> table = [] {
    std::vector<Integer> t(kMaxCount + 1);
    t[0] = 1;
    for (int k = 1; k <= kMaxCount; ++k) t[k] = t[k - 1] * k;
    return t;
  }();
  return table;
}

void check_site(int n, int i) {
  if (i < 1 || i > n) {
    throw InvalidArgument("site index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
}

}  // namespace

// --- Monomial ---------------------------------------------------------------

Monomial::Monomial(int sites, int species)
    : sites_(sites), species_(species), occ_(static_cast<std::size_t>(sites) * species, 0) {
  if (sites < 0 || species < 0) throw InvalidArgument("negative monomial shape");
}

Monomial Monomial::from_rows(const std::vector<std::vector<int>>& rows) {
  const int sites = static_cast<int>(rows.size());
  const int species = sites == 0 ? 0 : static_cast<int>(rows.front().size());
  Monomial m(sites, species);
  for (int i = 0; i < sites; ++i) {
    if (static_cast<int>(rows[i].size()) != species) {
      throw InvalidArgument("ragged occupation matrix");
    }
    for (int s = 0; s < species; ++s) m.set(i, s, rows[i][s]);
  }
  return m;
}

void Monomial::set(int site, int species, int count) {
  if (count < 0 || count > kMaxCount) throw InvalidArgument("occupation out of range");
  occ_[index(site, species)] = static_cast<Count>(count);
}

void Monomial::add(int site, int species, int delta) {
  set(site, species, at(site, species) + delta);
}

int Monomial::degree() const {
  int d = 0;
  for (auto c : occ_) d += c;
  return d;
}

int Monomial::site_total(int site) const {
  int t = 0;
  for (int s = 0; s < species_; ++s) t += at(site, s);
  return t;
}

int Monomial::species_total(int species) const {
  int t = 0;
  for (int i = 0; i < sites_; ++i) t += at(i, species);
  return t;
}

std::vector<int> Monomial::site_totals() const {
  std::vector<int> totals(sites_);
  for (int i = 0; i < sites_; ++i) totals[i] = site_total(i);
  return totals;
}

Integer Monomial::factorial_weight() const {
  const auto& f = factorial_table();
  Integer w = 1;
  for (auto c : occ_) {
    if (c > 1) w *= f[c];
  }
  return w;
}

std::vector<std::vector<int>> Monomial::rows() const {
  std::vector<std::vector<int>> out(sites_, std::vector<int>(species_));
  for (int i = 0; i < sites_; ++i) {
    for (int s = 0; s < species_; ++s) out[i][s] = at(i, s);
  }
  return out;
}

std::size_t Monomial::hash() const { return boost::hash_range(occ_.begin(), occ_.end()); }

// --- StateVector ------------------------------------------------------------

StateVector::StateVector(int n) : n_(n) {
  if (n < 1) throw InvalidArgument("a state needs at least one site");
}

StateVector StateVector::vacuum(int n) {
  return from_monomial(n, Monomial(n, n - 1));
}

StateVector StateVector::from_monomial(int n, Monomial m, Rational coeff) {
  std::vector<Term> terms;
  terms.push_back({std::move(m), std::move(coeff)});
  return from_terms(n, std::move(terms));
}

StateVector StateVector::from_terms(int n, std::vector<Term> terms) {
  StateVector s(n);
  for (const auto& t : terms) {
    if (t.monomial.sites() != n || t.monomial.species() != n - 1) {
      throw InvalidArgument("monomial shape does not match an n-site state");
    }
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
  for (auto& t : terms) {
    t.coeff.canonicalize();
    if (!s.terms_.empty() && s.terms_.back().monomial == t.monomial) {
      s.terms_.back().coeff += t.coeff;
    } else {
      s.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(s.terms_, [](const Term& t) { return sgn(t.coeff) == 0; });
  return s;
}

Rational StateVector::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.monomial < x; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

Rational StateVector::norm_sq() const { return inner_product(*this, *this); }

StateVector StateVector::scaled(const Rational& factor) const {
  StateVector out(n_);
  if (sgn(factor) == 0) return out;
  Rational f = factor;
  f.canonicalize();
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coeff *= f;
  return out;
}

namespace {

StateVector combine(const StateVector& a, const StateVector& b, int sign) {
  if (a.n() != b.n()) throw InvalidArgument("site-count mismatch");
  std::vector<Term> terms(a.terms().begin(), a.terms().end());
  for (const auto& t : b.terms()) terms.push_back({t.monomial, sign > 0 ? t.coeff : Rational(-t.coeff)});
  return StateVector::from_terms(a.n(), std::move(terms));
}

}  // namespace

StateVector operator+(const StateVector& a, const StateVector& b) { return combine(a, b, +1); }
StateVector operator-(const StateVector& a, const StateVector& b) { return combine(a, b, -1); }

bool operator==(const StateVector& a, const StateVector& b) {
  if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (!(a.terms_[k].monomial == b.terms_[k].monomial) || a.terms_[k].coeff != b.terms_[k].coeff) {
      return false;
    }
  }
  return true;
}

std::string StateVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    os << (sgn(t.coeff) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    Rational magnitude = abs(t.coeff);
    bool any = false;
    if (magnitude != 1) {
      os << magnitude.get_str();
      any = true;
    }
    for (int i = 0; i < t.monomial.sites(); ++i) {
      for (int s = 0; s < t.monomial.species(); ++s) {
        int p = t.monomial.at(i, s);
        if (p == 0) continue;
        os << (any ? " " : "") << "a+(" << i + 1 << "," << s + 1 << ")";
        if (p > 1) os << "^" << p;
        any = true;
      }
    }
    if (!any) os << "1";
    first = false;
  }
  os << " |0>";
  return os.str();
}

// --- StateBuilder -----------------------------------------------------------

void StateBuilder::add(const Monomial& m, const Rational& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = acc_.try_emplace(m, coeff);
  if (inserted) {
    it->second.canonicalize();
  } else {
    Rational c = coeff;
    c.canonicalize();
    it->second += c;
  }
}

void StateBuilder::add(const StateVector& s, const Rational& factor) {
  for (const auto& t : s.terms()) add(t.monomial, t.coeff * factor);
}

StateVector StateBuilder::build() && {
  std::vector<Term> terms;
  terms.reserve(acc_.size());
  for (auto& [m, c] : acc_) {
    if (sgn(c) != 0) terms.push_back({m, std::move(c)});
  }
  return StateVector::from_terms(n_, std::move(terms));
}

// --- Operators --------------------------------------------------------------

std::string OperatorId::to_string() const {
  std::ostringstream os;
  if (kind == Kind::kTransfer) {
    os << "c(" << i << "," << j << ")";
  } else {
    os << "h(" << i << "," << j << ")";
  }
  return os.str();
}

StateVector apply_transfer(int i, int j, const StateVector& s) {
  const int n = s.n();
  check_site(n, i);
  check_site(n, j);
  if (i == j) throw InvalidArgument("transfer operator needs distinct sites");
  StateBuilder out(n);
  for (const auto& t : s.terms()) {
    for (int k = 0; k < n - 1; ++k) {
      const int from = t.monomial.at(j - 1, k);
      if (from == 0) continue;
      Monomial m = t.monomial;
      m.add(j - 1, k, -1);
      m.add(i - 1, k, +1);
      out.add(m, t.coeff * from);
    }
  }
  return std::move(out).build();
}

StateVector apply(const OperatorId& op, const StateVector& s) {
  if (op.kind == OperatorId::Kind::kTransfer) return apply_transfer(op.i, op.j, s);
  const int n = s.n();
  check_site(n, op.i);
  check_site(n, op.j);
  std::vector<Term> terms;
  for (const auto& t : s.terms()) {
    const int eigen = t.monomial.site_total(op.i - 1) - t.monomial.site_total(op.j - 1);
    terms.push_back({t.monomial, t.coeff * eigen});
  }
  return StateVector::from_terms(n, std::move(terms));
}

std::optional<std::vector<int>> site_occupations(const StateVector& s) {
  if (s.is_zero()) throw InvalidArgument("the zero state has no weight");
  std::optional<std::vector<int>> common;
  for (const auto& t : s.terms()) {
    auto totals = t.monomial.site_totals();
    if (!common) {
      common = std::move(totals);
    } else if (*common != totals) {
      return std::nullopt;
    }
  }
  return common;
}

std::optional<Weight> weight_on(const StateVector& s, std::span<const int> sites) {
  if (s.is_zero()) throw InvalidArgument("the zero state has no weight");
  for (int i : sites) check_site(s.n(), i);
  std::optional<Weight> common;
  for (const auto& t : s.terms()) {
    Weight w(sites.empty() ? 0 : sites.size() - 1);
    for (std::size_t a = 0; a + 1 < sites.size(); ++a) {
      w[a] = t.monomial.site_total(sites[a] - 1) - t.monomial.site_total(sites[a + 1] - 1);
    }
    if (!common) {
      common = std::move(w);
    } else if (*common != w) {
      return std::nullopt;
    }
  }
  return common;
}

std::optional<Weight> weight(const StateVector& s, int m) {
  if (m < 1 || m > s.n()) throw InvalidArgument("level outside 1..n");
  std::vector<int> sites(m);
  std::iota(sites.begin(), sites.end(), 1);
  return weight_on(s, sites);
}

Rational inner_product(const StateVector& a, const StateVector& b) {
  if (a.n() != b.n()) throw InvalidArgument("site-count mismatch in inner product");
  Rational total = 0;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() && ib != b.terms().end()) {
    if (ia->monomial < ib->monomial) {
      ++ia;
    } else if (ib->monomial < ia->monomial) {
      ++ib;
    } else {
      total += ia->coeff * ib->coeff * Rational(ia->monomial.factorial_weight());
      ++ia;
      ++ib;
    }
  }
  return total;
}

int boson_count(const StateVector& s) {
  if (s.is_zero()) throw InvalidArgument("the zero state has no boson number");
  const int d = s.terms().front().monomial.degree();
  for (const auto& t : s.terms()) {
    if (t.monomial.degree() != d) throw InvalidArgument("inhomogeneous state");
  }
  return d;
}

StateVector primitive_form(const StateVector& s) {
  if (s.is_zero()) return s;
  Integer den_lcm = 1;
  for (const auto& t : s.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Integer num_gcd = 0;
  for (const auto& t : s.terms()) {
    Integer scaled = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (sgn(s.terms().front().coeff) < 0) factor = -factor;
  return s.scaled(factor);
}

// --- Substitution -----------------------------------------------------------

namespace {

VPolynomial ring_one(int n, const VPolynomial*) { return VPolynomial::constant(n, 1); }
std::complex<double> ring_one(int, const std::complex<double>*) { return 1.0; }

VPolynomial ring_scale(const VPolynomial& p, const Rational& q) {
  VPolynomial out = p;
  out *= q;
  return out;
}
std::complex<double> ring_scale(const std::complex<double>& z, const Rational& q) {
  return z * q.get_d();
}

bool ring_is_zero(const VPolynomial& p) { return p.is_zero(); }
bool ring_is_zero(const std::complex<double>& z) { return z == 0.0; }

using SiteCounts = boost::container::small_vector<std::uint8_t, 8>;

struct SiteCountsHash {
  std::size_t operator()(const SiteCounts& c) const { return boost::hash_range(c.begin(), c.end()); }
};

// Expands Π_i (Σ_k W_{ik} x_k)^{counts_i} into {output counts -> coefficient}.
template <typename Ring, typename Matrix>
std::map<SiteCounts, Ring> expand_species(const SiteCounts& counts, const Matrix& W, int n) {
  std::map<SiteCounts, Ring> current;
  current.emplace(SiteCounts(n, 0), ring_one(n, static_cast<const Ring*>(nullptr)));
  for (int i = 0; i < n; ++i) {
    for (int rep = 0; rep < counts[i]; ++rep) {
      std::map<SiteCounts, Ring> next;
      for (const auto& [c, value] : current) {
        for (int k = 0; k < n; ++k) {
          const auto& w = W(i, k);
          if (ring_is_zero(w)) continue;
          SiteCounts shifted = c;
          shifted[k] = static_cast<std::uint8_t>(shifted[k] + 1);
          auto product = value * w;
          auto [it, inserted] = next.try_emplace(shifted, product);
          if (!inserted) it->second += product;
        }
      }
      current = std::move(next);
    }
  }
  std::erase_if(current, [](const auto& kv) { return ring_is_zero(kv.second); });
  return current;
}

template <typename Ring, typename Matrix>
TransformedState<Ring> substitute_impl(const StateVector& s, const Matrix& W) {
  const int n = s.n();
  const int species = n - 1;
  std::unordered_map<SiteCounts, std::map<SiteCounts, Ring>, SiteCountsHash> cache;
  std::map<Monomial, Ring> acc;

  for (const auto& t : s.terms()) {
    std::vector<const std::map<SiteCounts, Ring>*> per_species;
    for (int sp = 0; sp < species; ++sp) {
      SiteCounts counts(n);
      for (int i = 0; i < n; ++i) counts[i] = static_cast<std::uint8_t>(t.monomial.at(i, sp));
      auto it = cache.find(counts);
      if (it == cache.end()) {
        it = cache.emplace(counts, expand_species<Ring>(counts, W, n)).first;
      }
      per_species.push_back(&it->second);
    }
    // Cartesian product over species.
    std::vector<std::pair<Monomial, Ring>> partial;
    partial.emplace_back(Monomial(n, species), ring_scale(ring_one(n, static_cast<const Ring*>(nullptr)), t.coeff));
    for (int sp = 0; sp < species; ++sp) {
      std::vector<std::pair<Monomial, Ring>> next;
      next.reserve(partial.size() * per_species[sp]->size());
      for (const auto& [m, value] : partial) {
        for (const auto& [counts, factor] : *per_species[sp]) {
          Monomial out = m;
          for (int i = 0; i < n; ++i) out.set(i, sp, counts[i]);
          next.emplace_back(std::move(out), value * factor);
        }
      }
      partial = std::move(next);
    }
    for (auto& [m, value] : partial) {
      auto [it, inserted] = acc.try_emplace(m, value);
      if (!inserted) it->second += value;
    }
  }

  TransformedState<Ring> out;
  out.n = n;
  for (auto& [m, value] : acc) {
    if (!ring_is_zero(value)) out.terms.emplace_back(m, std::move(value));
  }
  return out;
}

struct PolyMatrixView {
  const std::vector<std::vector<VPolynomial>>& rows;
  const VPolynomial& operator()(int i, int k) const { return rows[i][k]; }
};

struct ComplexMatrixView {
  const ComplexMatrix& m;
  std::complex<double> operator()(int i, int k) const { return m(i, k); }
};

}  // namespace

SymbolicState substitute(const StateVector& s, const std::vector<std::vector<VPolynomial>>& V) {
  const auto n = static_cast<std::size_t>(s.n());
  if (V.size() != n) throw InvalidArgument("substitution matrix has the wrong dimension");
  for (const auto& row : V) {
    if (row.size() != n) throw InvalidArgument("substitution matrix has the wrong dimension");
  }
  return substitute_impl<VPolynomial>(s, PolyMatrixView{V});
}

NumericState substitute(const StateVector& s, const ComplexMatrix& V) {
  if (V.rows() != s.n() || V.cols() != s.n()) {
    throw InvalidArgument("substitution matrix has the wrong dimension");
  }
  return substitute_impl<std::complex<double>>(s, ComplexMatrixView{V});
}

std::vector<std::vector<VPolynomial>> formal_matrix(int n, bool transposed) {
  std::vector<std::vector<VPolynomial>> V(n, std::vector<VPolynomial>(n));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      V[i][k] = transposed ? VPolynomial::symbol(n, k + 1, i + 1) : VPolynomial::symbol(n, i + 1, k + 1);
    }
  }
  return V;
}

}  // namespace irrepforge
