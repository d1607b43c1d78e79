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

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "irrepforge/canonical.hpp"
#include "irrepforge/dfunc.hpp"
#include "irrepforge/errors.hpp"
#include "irrepforge/gt.hpp"
#include "irrepforge/serialization.hpp"
#include "irrepforge/verify.hpp"

namespace irrepforge::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  std::string kappa;
  std::string chain;
  std::string angles;
  std::string matrix;
  bool symbolic = false;
  bool pretty = false;
  std::uint64_t seed = 1;
  std::string out;
  std::size_t row = 0;
  std::size_t col = 0;
  std::string scope = "all";
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream is(text);
  while (std::getline(is, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw UsageError("malformed " + what + ": '" + text + "'");
  }
  if (used != text.size()) throw UsageError("malformed " + what + ": '" + text + "'");
  return value;
}

double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("malformed " + what + ": '" + text + "'");
  }
  if (used != text.size()) throw UsageError("malformed " + what + ": '" + text + "'");
  return value;
}

std::vector<int> parse_ints(const std::string& text, const std::string& what) {
  if (text.empty()) throw UsageError(what + " is empty");
  std::vector<int> values;
  for (const auto& p : split(text, ',')) values.push_back(parse_int(p, what));
  return values;
}

int max_bosons() {
  const char* env = std::getenv("IRREPFORGE_MAX_BOSONS");
  if (env == nullptr || *env == '\0') return 24;
  try {
    return parse_int(env, "IRREPFORGE_MAX_BOSONS");
  } catch (const UsageError&) {
    throw InvalidArgument(std::string("IRREPFORGE_MAX_BOSONS is not an integer: ") + env);
  }
}

IrrepLabel irrep_from(const Options& o) {
  if (o.n < 2) throw InvalidArgument("n must be at least 2");
  IrrepLabel K(parse_ints(o.kappa, "irrep label"));
  if (K.rank() != o.n - 1) {
    throw InvalidArgument("irrep label for su(" + std::to_string(o.n) + ") needs " + std::to_string(o.n - 1) +
                          " entries");
  }
  const int cap = max_bosons();
  if (K.boson_count() > cap) {
    throw InvalidArgument("boson count " + std::to_string(K.boson_count()) + " exceeds IRREPFORGE_MAX_BOSONS=" +
                          std::to_string(cap));
  }
  return K;
}

SubalgebraChain chain_from(const Options& o) {
  if (o.chain.empty()) return SubalgebraChain::canonical(o.n);
  std::vector<std::vector<int>> levels;
  for (const auto& level : split(o.chain, ';')) levels.push_back(parse_ints(level, "chain level"));
  return SubalgebraChain::from_levels(o.n, levels);
}

std::vector<EulerFactor> parse_angles(const std::string& text) {
  std::vector<EulerFactor> factors;
  for (const auto& segment : split(text, ';')) {
    const auto colon = segment.find(':');
    if (colon == std::string::npos) throw UsageError("angle segment needs 'mode:alpha,beta,gamma': " + segment);
    const auto values = split(segment.substr(colon + 1), ',');
    if (values.size() != 3) throw UsageError("angle segment needs three angles: " + segment);
    factors.push_back({parse_int(segment.substr(0, colon), "mode"), parse_double(values[0], "angle"),
                       parse_double(values[1], "angle"), parse_double(values[2], "angle")});
  }
  return factors;
}

ComplexMatrix unitary_from(const Options& o) {
  if (!o.angles.empty()) return resolve_unitary(o.n, parse_angles(o.angles));
  std::ifstream in(o.matrix);
  if (!in) throw InvalidArgument("cannot read matrix file " + o.matrix);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("matrix file is not valid JSON: ") + e.what());
  }
  return resolve_unitary(o.n, matrix_from_json(j));
}

void require_group_element(const Options& o) {
  const int modes = (o.symbolic ? 1 : 0) + (o.angles.empty() ? 0 : 1) + (o.matrix.empty() ? 0 : 1);
  if (modes != 1) throw UsageError("exactly one of --symbolic, --angles, --matrix is required");
}

std::string vec(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t a = 0; a < v.size(); ++a) s += (a ? "," : "") + std::to_string(v[a]);
  return s + ")";
}

std::string label_text(const CanonicalLabel& l) {
  std::string s;
  for (const auto& [m, k] : l.irreps) {
    if (!s.empty()) s += " | ";
    s += "K" + std::to_string(m) + "=" + vec(k) + " L" + std::to_string(m) + "=" + vec(l.weights.at(m));
  }
  return s;
}

std::string complex_text(std::complex<double> z) {
  std::ostringstream os;
  os << std::setprecision(12) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

std::string dpoly_text(const DPolynomial& d) {
  if (d.poly.is_zero()) return "0";
  return "(" + d.poly.to_string() + ") / sqrt(" + d.scale_sq.get_str() + ")";
}

const CanonicalState& state_at(const CanonicalBasis& basis, std::size_t index, const std::string& what) {
  if (index >= basis.size()) {
    throw InvalidArgument(what + " index " + std::to_string(index) + " outside 0.." + std::to_string(basis.size() - 1));
  }
  return basis.states[index];
}

Json labels_json(const CanonicalBasis& basis) {
  Json labels = Json::array();
  for (const auto& s : basis.states) labels.push_back(s.label);
  return labels;
}

struct Output {
  Json json;
  std::string text;
  int code = kExitOk;
};

Output cmd_dim(const Options& o) {
  const auto K = irrep_from(o);
  const auto d = dimension(o.n, K);
  return {Json{{"dimension", d}}, "dimension " + std::to_string(d) + "\n"};
}

Output cmd_basis(const Options& o) {
  const auto K = irrep_from(o);
  const auto table = basis_set(o.n, build_hws(o.n, K), chain_from(o));
  std::ostringstream os;
  os << "su(" << o.n << ") irrep " << vec(K.values()) << ": " << table.state_count() << " states, "
     << table.lowering_ops << " lowering operations\n";
  for (const auto& [w, states] : table.vertices) {
    os << "weight " << vec(w) << " multiplicity " << states.size() << "\n";
    for (const auto& s : states) os << "  " << s.to_string() << "\n";
  }
  return {Json(table), os.str()};
}

Output cmd_canonical(const Options& o) {
  const auto K = irrep_from(o);
  const auto basis = canonical_basis(o.n, K, chain_from(o));
  std::ostringstream os;
  os << "su(" << o.n << ") irrep " << vec(K.values()) << ": " << basis.size() << " states, "
     << basis.lowering_ops << " lowering operations\n";
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const auto& s = basis.states[a];
    os << "[" << a << "] " << label_text(s.label) << "\n    norm^2 " << s.state.norm_sq().get_str() << "  "
       << s.state.to_string() << "\n";
  }
  return {canonical_basis_to_json(basis), os.str()};
}

Output cmd_gt(const Options& o) {
  const auto K = irrep_from(o);
  const auto chain = chain_from(o);
  if (!chain.is_canonical()) throw InvalidArgument("Gelfand-Tsetlin patterns require the canonical chain");
  const auto basis = canonical_basis(o.n, K, chain);
  Json patterns = Json::array();
  std::ostringstream os;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const auto& s = basis.states[a];
    const auto p = gt_pattern(s.label, s.state);
    patterns.push_back({{"label", s.label}, {"pattern", p}});
    os << "[" << a << "] " << label_text(s.label) << "\n";
    for (std::size_t r = 0; r < p.rows.size(); ++r) os << "    " << std::string(2 * r, ' ') << vec(p.rows[r]) << "\n";
  }
  return {Json{{"n", o.n}, {"irrep", K.values()}, {"patterns", std::move(patterns)}}, os.str()};
}

Output cmd_dfun(const Options& o) {
  require_group_element(o);
  const auto K = irrep_from(o);
  const auto basis = canonical_basis(o.n, K, chain_from(o));
  const auto& row = state_at(basis, o.row, "row").label;
  const auto& col = state_at(basis, o.col, "column").label;
  Json j{{"row", row}, {"col", col}};
  std::string text = "row " + label_text(row) + "\ncol " + label_text(col) + "\n";
  if (o.symbolic) {
    const auto d = d_function_symbolic(basis, row, col);
    j["d"] = d;
    text += "D = " + dpoly_text(d) + "\n";
  } else {
    const auto value = d_function(basis, row, col, unitary_from(o));
    j["value"] = {value.real(), value.imag()};
    text += "D = " + complex_text(value) + "\n";
  }
  return {std::move(j), text};
}

Output cmd_dmatrix(const Options& o) {
  require_group_element(o);
  const auto K = irrep_from(o);
  const auto basis = canonical_basis(o.n, K, chain_from(o));
  Json j{{"n", o.n}, {"irrep", K.values()}, {"labels", labels_json(basis)}};
  std::ostringstream os;
  for (std::size_t a = 0; a < basis.size(); ++a) os << "[" << a << "] " << label_text(basis.states[a].label) << "\n";
  if (o.symbolic) {
    const auto D = d_matrix_symbolic(basis);
    j["entries"] = D;
    for (std::size_t r = 0; r < D.size(); ++r) {
      for (std::size_t c = 0; c < D.size(); ++c) os << "D[" << r << "][" << c << "] = " << dpoly_text(D[r][c]) << "\n";
    }
  } else {
    const auto D = d_matrix(basis, unitary_from(o));
    j["matrix"] = matrix_to_json(D);
    os << std::fixed << std::setprecision(6);
    for (Eigen::Index r = 0; r < D.rows(); ++r) {
      for (Eigen::Index c = 0; c < D.cols(); ++c) {
        os << (c ? "  " : "") << std::setw(9) << D(r, c).real() << (D(r, c).imag() < 0 ? "-" : "+")
           << std::setw(8) << std::abs(D(r, c).imag()) << "i";
      }
      os << "\n";
    }
  }
  return {std::move(j), os.str()};
}

Output cmd_verify(const Options& o) {
  const auto report = run_verification(o.scope, o.seed);
  return {report.to_json(), report.to_text(), report.passed() ? kExitOk : kExitVerifyFailed};
}

CLI::App* add_irrep_options(CLI::App& app, Options& o, const std::string& name, const std::string& help) {
  auto* sub = app.add_subcommand(name, help);
  sub->add_option("-n", o.n, "su(n) rank parameter")->required();
  sub->add_option("-K", o.kappa, "highest weight k1,k2,...")->required();
  sub->add_option("--chain", o.chain, "subalgebra chain I(n-1);...;I(2), e.g. 1,2;1");
  return sub;
}

void add_group_options(CLI::App* sub, Options& o) {
  sub->add_option("--angles", o.angles, "Euler factors mode:alpha,beta,gamma;...");
  sub->add_option("--matrix", o.matrix, "JSON file with an n x n unitary");
  sub->add_flag("--symbolic", o.symbolic, "polynomial in the entries V_ij");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Boson-realization irreps and D-functions of su(n)", "irrepforge"};
  app.require_subcommand(1, 1);
  app.add_flag("--pretty", o.pretty, "human-readable output");
  app.add_option("--out", o.out, "write output to a file");

  add_irrep_options(app, o, "dim", "dimension of an irrep");
  add_irrep_options(app, o, "basis", "breadth-first basis sets of each weight");
  add_irrep_options(app, o, "canonical", "canonical basis with full subalgebra labels");
  add_irrep_options(app, o, "gt", "Gelfand-Tsetlin patterns of the canonical basis");
  auto* dfun = add_irrep_options(app, o, "dfun", "one D-function");
  dfun->add_option("--row", o.row, "row index in canonical order");
  dfun->add_option("--col", o.col, "column index in canonical order");
  add_group_options(dfun, o);
  add_group_options(add_irrep_options(app, o, "dmatrix", "full D-matrix"), o);
  auto* verify = app.add_subcommand("verify", "run the built-in invariant checks");
  verify->add_option("scope", o.scope, "all or one check group")->check(CLI::IsMember(verify_scopes()));
  verify->add_option("--seed", o.seed, "seed for randomized checks");
  for (auto* sub : app.get_subcommands({})) {
    sub->add_flag("--pretty", o.pretty, "human-readable output");
    sub->add_option("--out", o.out, "write output to a file");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Output result;
  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "dim") result = cmd_dim(o);
    else if (name == "basis") result = cmd_basis(o);
    else if (name == "canonical") result = cmd_canonical(o);
    else if (name == "gt") result = cmd_gt(o);
    else if (name == "dfun") result = cmd_dfun(o);
    else if (name == "dmatrix") result = cmd_dmatrix(o);
    else result = cmd_verify(o);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitEngine;
  }

  const std::string payload = o.pretty ? result.text : result.json.dump() + "\n";
  if (o.out.empty()) {
    out << payload;
  } else {
    std::ofstream file(o.out);
    if (!file || !(file << payload)) {
      err << "error: cannot write " << o.out << "\n";
      return kExitEngine;
    }
  }
  return result.code;
}

}  // namespace irrepforge::cli
