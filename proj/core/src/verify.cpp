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

#include "irrepforge/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "irrepforge/canonical.hpp"
#include "irrepforge/dfunc.hpp"
#include "irrepforge/errors.hpp"
#include "irrepforge/exact_linalg.hpp"
#include "irrepforge/gt.hpp"

namespace irrepforge {
namespace {

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t a = 0; a < v.size(); ++a) out += (a ? "," : "") + std::to_string(v[a]);
  return out;
}

std::string irrep_name(int n, const IrrepLabel& K) {
  return "SU(" + std::to_string(n) + ") (" + join(K.values()) + ")";
}

class Context {
 public:
  explicit Context(std::uint64_t seed) : seed_(seed) {}

  const CanonicalBasis& basis(int n, const IrrepLabel& K) {
    auto key = std::make_pair(n, K.values());
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_.emplace(key, canonical_basis(n, K, SubalgebraChain::canonical(n))).first;
    }
    return it->second;
  }

  // Each scope draws from its own stream so that a scope reports the same
  // values whether it runs alone or as part of "all".
  std::mt19937_64 rng(std::string_view scope) const {
    std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                      tag(scope)};
    return std::mt19937_64(seq);
  }

  static std::uint32_t tag(std::string_view scope) {
    std::uint32_t h = 2166136261u;
    for (char ch : scope) h = (h ^ static_cast<unsigned char>(ch)) * 16777619u;
    return h;
  }

  void add(std::string scope, std::string name, bool passed, std::string measured) {
    checks.push_back({std::move(scope), std::move(name), passed, std::move(measured)});
  }

  std::vector<CheckResult> checks;

 private:
  std::uint64_t seed_;
  std::map<std::pair<int, std::vector<int>>, CanonicalBasis> cache_;
};

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

void check_dimension(Context& ctx) {
  for (const auto& [n, K] : dimension_suite()) {
    const auto& basis = ctx.basis(n, K);
    const auto expected = dimension(n, K);
    ctx.add("dimension", irrep_name(n, K), basis.size() == expected,
            "states=" + std::to_string(basis.size()) + " expected=" + std::to_string(expected));
  }
}

void check_multiplicity(Context& ctx) {
  for (const auto& [n, K] : dimension_suite()) {
    if (n != 3) continue;
    const auto chain = SubalgebraChain::canonical(n);
    const auto table = basis_set(n, build_hws(n, K), chain);
    std::map<Weight, std::size_t> oracle;
    for (const auto& p : enumerate_gt_patterns(K)) ++oracle[gt_boson_weight(p)];
    bool ok = oracle.size() == table.vertices.size();
    std::size_t mismatches = 0;
    for (const auto& [w, count] : oracle) {
      if (table.multiplicity(w) != count) ++mismatches;
    }
    ok = ok && mismatches == 0;
    std::string measured = "weights=" + std::to_string(table.vertices.size()) +
                           " oracle_weights=" + std::to_string(oracle.size()) +
                           " mismatches=" + std::to_string(mismatches);
    if (K.values() == std::vector<int>{1, 1}) {
      measured += " mult(0,0)=" + std::to_string(table.multiplicity({0, 0}));
      ok = ok && table.multiplicity({0, 0}) == 2;
    }
    ctx.add("multiplicity", irrep_name(n, K), ok, measured);
  }
}

void check_bounds(Context& ctx) {
  for (const auto& [n, K] : dimension_suite()) {
    const auto& basis = ctx.basis(n, K);
    bool runs_ok = true;
    std::uint64_t worst_ops = 0;
    std::uint64_t worst_bound = 1;
    for (const auto& run : basis.runs) {
      const std::uint64_t m = run.level;
      const std::uint64_t bound = dimension(run.level, run.irrep) * m * (m - 1) / 2;
      if (run.lowering_ops > bound) runs_ok = false;
      if (run.lowering_ops * worst_bound >= worst_ops * bound) {
        worst_ops = run.lowering_ops;
        worst_bound = bound;
      }
    }
    ctx.add("bounds", irrep_name(n, K) + " per basis_set run", runs_ok,
            "runs=" + std::to_string(basis.runs.size()) + " tightest=" + std::to_string(worst_ops) + "/" +
                std::to_string(worst_bound));
    const std::uint64_t nn = n;
    const std::uint64_t total_bound = dimension(n, K) * nn * (nn - 1) * (nn - 1) / 2;
    ctx.add("bounds", irrep_name(n, K) + " total", basis.lowering_ops <= total_bound,
            "ops=" + std::to_string(basis.lowering_ops) + " bound=" + std::to_string(total_bound));
  }
}

void check_su2(Context& ctx) {
  auto rng = ctx.rng("su2");
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  std::uniform_real_distribution<double> polar(0.0, std::numbers::pi);
  for (int two_j = 1; two_j <= 6; ++two_j) {
    const auto& basis = ctx.basis(2, IrrepLabel({two_j}));
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const double a = angle(rng);
      const double b = polar(rng);
      const double g = angle(rng);
      const ComplexMatrix D = d_matrix(basis, su2_block(a, b, g));
      for (std::size_t r = 0; r < basis.size(); ++r) {
        for (std::size_t c = 0; c < basis.size(); ++c) {
          const auto oracle = su2_wigner_oracle(two_j, basis.states[r].label.weights.at(2)[0],
                                                basis.states[c].label.weights.at(2)[0], a, b, g);
          worst = std::max(worst, std::abs(D(r, c) - oracle));
        }
      }
    }
    ctx.add("su2", "2J=" + std::to_string(two_j) + " vs Wigner oracle, 100 angle triples", worst <= 1e-12,
            "max_dev=" + sci(worst));
  }
}

void check_unitarity(Context& ctx) {
  auto rng = ctx.rng("unitarity");
  for (const auto& [n, K] : unitary_suite()) {
    const auto& basis = ctx.basis(n, K);
    const auto dim = static_cast<Eigen::Index>(basis.size());
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexMatrix D = d_matrix(basis, random_special_unitary(n, rng));
      worst = std::max(worst, max_abs(D.adjoint() * D - ComplexMatrix::Identity(dim, dim)));
    }
    ctx.add("unitarity", irrep_name(n, K) + " 20 random unitaries", worst <= 1e-10, "max_dev=" + sci(worst));
  }
}

void check_homomorphism(Context& ctx) {
  auto rng = ctx.rng("homomorphism");
  for (const auto& [n, K] : unitary_suite()) {
    const auto& basis = ctx.basis(n, K);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexMatrix V1 = random_special_unitary(n, rng);
      const ComplexMatrix V2 = random_special_unitary(n, rng);
      const ComplexMatrix lhs = d_matrix(basis, V1 * V2);
      worst = std::max(worst, max_abs(lhs - d_matrix(basis, V1) * d_matrix(basis, V2)));
    }
    ctx.add("homomorphism", irrep_name(n, K) + " 20 random pairs", worst <= 1e-9, "max_dev=" + sci(worst));
  }
}

// Site carrying the single boson of a fundamental-irrep state, read off the
// level-n weight: ν_i = t + Σ_{ℓ>=i} λ_ℓ with Σ ν_i = 1.
std::optional<int> fundamental_site(const CanonicalLabel& label, int n) {
  const auto& w = label.weights.at(n);
  int weighted = 0;
  for (int l = 1; l < n; ++l) weighted += l * w[l - 1];
  if ((1 - weighted) % n != 0) return std::nullopt;
  const int t = (1 - weighted) / n;
  std::optional<int> site;
  for (int i = 1; i <= n; ++i) {
    int nu = t;
    for (int l = i; l < n; ++l) nu += w[l - 1];
    if (nu == 1 && !site) {
      site = i;
    } else if (nu != 0) {
      return std::nullopt;
    }
  }
  return site;
}

void check_fundamental(Context& ctx) {
  for (int n = 2; n <= 5; ++n) {
    std::vector<int> kappa(n - 1, 0);
    kappa[0] = 1;
    const auto& basis = ctx.basis(n, IrrepLabel(kappa));
    std::vector<int> sigma;
    bool ok = basis.size() == static_cast<std::size_t>(n);
    for (const auto& s : basis.states) {
      const auto site = fundamental_site(s.label, n);
      if (!site) {
        ok = false;
        break;
      }
      sigma.push_back(*site);
    }
    auto sorted = sigma;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; ok && i < n; ++i) ok = sorted[i] == i + 1;
    std::size_t mismatches = 0;
    if (ok) {
      const auto D = d_matrix_symbolic(basis);
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          const DPolynomial expected{n, 1, VPolynomial::symbol(n, sigma[r], sigma[c])};
          if (!(D[r][c] == expected)) ++mismatches;
        }
      }
    }
    ctx.add("fundamental", "n=" + std::to_string(n) + " D equals V under site order (" + join(sigma) + ")",
            ok && mismatches == 0, "mismatched_entries=" + std::to_string(ok ? mismatches : n * n));
  }
}

void check_structure(Context& ctx) {
  for (const auto& [n, K] : dimension_suite()) {
    const auto& basis = ctx.basis(n, K);
    const auto& chain = basis.chain;
    std::size_t gram_bad = 0, raising_bad = 0, phase_bad = 0, cartan_bad = 0, degenerate = 0;
    for (std::size_t a = 0; a < basis.size(); ++a) {
      const auto& s = basis.states[a].state;
      if (s.norm_sq() <= 0) ++gram_bad;
      for (std::size_t b = a + 1; b < basis.size(); ++b) {
        if (inner_product(s, basis.states[b].state) != 0) ++gram_bad;
      }
      const int eq16 = sgn(simple_raising_overlap(s, basis.hws));
      if (eq16 < 0 || phase_overlap(s, basis.hws) <= 0) ++phase_bad;
      if (eq16 == 0) ++degenerate;
      const auto& label = basis.states[a].label;
      for (int m = n; m >= 2; --m) {
        const auto& lambda = label.weights.at(m);
        const auto cartans = generator_set(chain, m, GeneratorKind::kCartan);
        for (std::size_t h = 0; h < cartans.size(); ++h) {
          if (!(apply(cartans[h], s) == s.scaled(lambda[h]))) ++cartan_bad;
        }
        if (lambda == label.irreps.at(m)) {
          for (const auto& op : generator_set(chain, m, GeneratorKind::kRaising)) {
            if (!apply(op, s).is_zero()) ++raising_bad;
          }
        }
      }
    }
    const auto name = irrep_name(n, K);
    ctx.add("structure", name + " Gram diagonal", gram_bad == 0, "violations=" + std::to_string(gram_bad));
    ctx.add("structure", name + " hws raising annihilation", raising_bad == 0,
            "violations=" + std::to_string(raising_bad));
    ctx.add("structure", name + " phase positivity", phase_bad == 0,
            "violations=" + std::to_string(phase_bad) + " fallback_used=" + std::to_string(degenerate));
    ctx.add("structure", name + " Cartan eigenvalues", cartan_bad == 0,
            "violations=" + std::to_string(cartan_bad));
  }
}

void check_reachability(Context& ctx) {
  auto rng = ctx.rng("reachability");
  for (const std::vector<int>& kappa : {std::vector<int>{1, 1}, std::vector<int>{2, 1}}) {
    const IrrepLabel K(kappa);
    const auto chain = SubalgebraChain::canonical(3);
    const auto hws = build_hws(3, K);
    const auto table = basis_set(3, hws, chain);
    std::map<Weight, GramContext, std::greater<>> spans;
    for (const auto& [w, states] : table.vertices) {
      GramContext g;
      for (const auto& s : states) g = extend(std::move(g), s);
      spans.emplace(w, std::move(g));
    }
    const auto lowering = generator_set(chain, 3, GeneratorKind::kLowering);
    std::uniform_int_distribution<std::size_t> pick(0, lowering.size() - 1);
    std::uniform_int_distribution<int> length(1, 2 * K.boson_count() + 2);
    std::size_t independent = 0, nonzero = 0, checked = 0;
    for (int word = 0; word < 1000; ++word) {
      StateVector s = hws;
      const int len = length(rng);
      for (int step = 0; step < len && !s.is_zero(); ++step) {
        s = apply(lowering[pick(rng)], s);
        if (s.is_zero()) break;
        ++checked;
        const auto w = weight(s, 3);
        auto it = w ? spans.find(*w) : spans.end();
        if (it == spans.end() || it->second.is_independent(s)) ++independent;
      }
      if (!s.is_zero()) ++nonzero;
    }
    ctx.add("reachability", irrep_name(3, K) + " 1000 random lowering words", independent == 0,
            "nonzero_words=" + std::to_string(nonzero) + " states_checked=" + std::to_string(checked) +
                " outside_span=" + std::to_string(independent));
  }
}

void check_symbolic(Context& ctx) {
  auto rng = ctx.rng("symbolic");
  const auto& suite = unitary_suite();
  double worst = 0.0;
  std::size_t inhomogeneous = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto& [n, K] = suite[static_cast<std::size_t>(trial) % suite.size()];
    const auto& basis = ctx.basis(n, K);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    const auto& row = basis.states[pick(rng)].label;
    const auto& col = basis.states[pick(rng)].label;
    const ComplexMatrix V = random_special_unitary(n, rng);
    const auto poly = d_function_symbolic(basis, row, col);
    const int degree = poly.poly.homogeneous_degree();
    if (degree != -1 && degree != K.boson_count()) ++inhomogeneous;
    worst = std::max(worst, std::abs(poly.evaluate(V) - d_function(basis, row, col, V)));
  }
  ctx.add("symbolic", "50 random evaluations vs numeric", worst <= 1e-12, "max_dev=" + sci(worst));
  ctx.add("symbolic", "degree homogeneity", inhomogeneous == 0,
          "inhomogeneous=" + std::to_string(inhomogeneous));
}

using ScopeFn = void (*)(Context&);

const std::vector<std::pair<std::string, ScopeFn>>& scope_table() {
  static const std::vector<std::pair<std::string, ScopeFn>> table = {
      {"dimension", check_dimension},       {"multiplicity", check_multiplicity},
      {"bounds", check_bounds},             {"su2", check_su2},
      {"unitarity", check_unitarity},       {"homomorphism", check_homomorphism},
      {"fundamental", check_fundamental},   {"structure", check_structure},
      {"reachability", check_reachability}, {"symbolic", check_symbolic},
  };
  return table;
}

}  // namespace

const std::vector<SuiteIrrep>& dimension_suite() {
  static const std::vector<SuiteIrrep> suite = [] {
    std::vector<SuiteIrrep> s;
    for (int k = 1; k <= 8; ++k) s.push_back({2, IrrepLabel({k})});
    for (const auto& k : std::vector<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}, {2, 0}, {3, 0}, {2, 1}, {2, 2}, {3, 3}}) {
      s.push_back({3, IrrepLabel(k)});
    }
    for (const auto& k : std::vector<std::vector<int>>{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {1, 1, 1}, {2, 0, 0}}) {
      s.push_back({4, IrrepLabel(k)});
    }
    return s;
  }();
  return suite;
}

const std::vector<SuiteIrrep>& unitary_suite() {
  static const std::vector<SuiteIrrep> suite = {
      {3, IrrepLabel({1, 1})}, {3, IrrepLabel({2, 1})}, {3, IrrepLabel({2, 2})}, {4, IrrepLabel({1, 0, 1})}};
  return suite;
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) {
    list.push_back({{"scope", c.scope}, {"check", c.name}, {"passed", c.passed}, {"measured", c.measured}});
  }
  return {{"seed", seed}, {"passed", passed()}, {"checks", std::move(list)}};
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  os << "seed " << seed << "\n";
  std::size_t failed = 0;
  for (const auto& c : checks) {
    if (!c.passed) ++failed;
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.scope << ": " << c.name << " (" << c.measured << ")\n";
  }
  os << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  return os.str();
}

const std::vector<std::string>& verify_scopes() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v{"all"};
    for (const auto& [name, fn] : scope_table()) v.push_back(name);
    return v;
  }();
  return names;
}

VerifyReport run_verification(std::string_view scope, std::uint64_t seed) {
  Context ctx(seed);
  bool found = false;
  for (const auto& [name, fn] : scope_table()) {
    if (scope == "all" || scope == name) {
      fn(ctx);
      found = true;
    }
  }
  if (!found) throw InvalidArgument("unknown verify scope: " + std::string(scope));
  return {seed, std::move(ctx.checks)};
}

}  // namespace irrepforge
