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

#include "irrepforge/serialization.hpp"

#include <string>

#include "irrepforge/errors.hpp"

namespace irrepforge {
namespace {

std::vector<int> flatten_exponent(const Json& deg, int n) {
  if (!deg.is_array() || static_cast<int>(deg.size()) != n) {
    throw InvalidArgument("exponent matrix has the wrong shape");
  }
  std::vector<int> flat;
  for (const auto& row : deg) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw InvalidArgument("exponent matrix has the wrong shape");
    }
    for (const auto& e : row) flat.push_back(e.get<int>());
  }
  return flat;
}

}  // namespace

Json rational_to_json(const Rational& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Rational rational_from_json(const Json& j) {
  Rational q;
  try {
    q = Rational(Integer(j.at("num").get<std::string>()), Integer(j.at("den").get<std::string>()));
  } catch (const std::invalid_argument&) {
    throw InvalidArgument("malformed rational");
  }
  if (q.get_den() == 0) throw InvalidArgument("zero denominator");
  q.canonicalize();
  return q;
}

void to_json(Json& j, const StateVector& s) {
  Json terms = Json::array();
  for (const auto& t : s.terms()) {
    Json term = rational_to_json(t.coeff);
    term["occ"] = t.monomial.rows();
    terms.push_back(std::move(term));
  }
  j = Json{{"n", s.n()}, {"terms", std::move(terms)}, {"norm_sq", rational_to_json(s.norm_sq())}};
}

void from_json(const Json& j, StateVector& s) {
  const int n = j.at("n").get<int>();
  std::vector<Term> terms;
  for (const auto& t : j.at("terms")) {
    terms.push_back({Monomial::from_rows(t.at("occ").get<std::vector<std::vector<int>>>()),
                     rational_from_json(t)});
  }
  s = StateVector::from_terms(n, std::move(terms));
  if (j.contains("norm_sq") && rational_from_json(j.at("norm_sq")) != s.norm_sq()) {
    throw InvalidArgument("norm_sq does not match the terms");
  }
}

void to_json(Json& j, const VertexTable& t) {
  Json vertices = Json::array();
  for (const auto& [w, states] : t.vertices) {
    vertices.push_back({{"weight", w}, {"states", states}});
  }
  j = Json{{"m", t.level}, {"vertices", std::move(vertices)}, {"lowering_ops", t.lowering_ops}};
}

void from_json(const Json& j, VertexTable& t) {
  t = VertexTable{};
  t.level = j.at("m").get<int>();
  t.lowering_ops = j.at("lowering_ops").get<std::uint64_t>();
  for (const auto& v : j.at("vertices")) {
    t.vertices[v.at("weight").get<Weight>()] = v.at("states").get<std::vector<StateVector>>();
  }
}

void to_json(Json& j, const CanonicalLabel& l) {
  Json irreps = Json::object();
  Json weights = Json::object();
  for (const auto& [m, k] : l.irreps) irreps[std::to_string(m)] = k;
  for (const auto& [m, w] : l.weights) weights[std::to_string(m)] = w;
  j = Json{{"irreps", std::move(irreps)}, {"weights", std::move(weights)}};
}

void from_json(const Json& j, CanonicalLabel& l) {
  l = CanonicalLabel{};
  for (const auto& [key, value] : j.at("irreps").items()) {
    l.irreps[std::stoi(key)] = value.get<std::vector<int>>();
  }
  for (const auto& [key, value] : j.at("weights").items()) {
    l.weights[std::stoi(key)] = value.get<Weight>();
  }
}

void to_json(Json& j, const GTPattern& p) { j = Json{{"rows", p.rows}}; }

void from_json(const Json& j, GTPattern& p) {
  p.rows = j.at("rows").get<std::vector<std::vector<int>>>();
  check_pattern(p);
}

void to_json(Json& j, const DPolynomial& d) {
  Json terms = Json::array();
  for (const auto& [e, c] : d.poly.terms()) {
    std::vector<std::vector<int>> deg(d.n, std::vector<int>(d.n));
    for (int i = 0; i < d.n; ++i) {
      for (int k = 0; k < d.n; ++k) deg[i][k] = e[static_cast<std::size_t>(i) * d.n + k];
    }
    Json term = rational_to_json(c);
    term["deg"] = std::move(deg);
    terms.push_back(std::move(term));
  }
  j = Json{{"n", d.n}, {"scale_sq", rational_to_json(d.scale_sq)}, {"terms", std::move(terms)}};
}

void from_json(const Json& j, DPolynomial& d) {
  d.n = j.at("n").get<int>();
  if (d.n < 1) throw InvalidArgument("n must be positive");
  d.scale_sq = rational_from_json(j.at("scale_sq"));
  d.poly = VPolynomial(d.n);
  for (const auto& t : j.at("terms")) {
    const auto flat = flatten_exponent(t.at("deg"), d.n);
    VExponent e(flat.size());
    for (std::size_t a = 0; a < flat.size(); ++a) {
      if (flat[a] < 0 || flat[a] > 255) throw InvalidArgument("exponent out of range");
      e[a] = static_cast<std::uint8_t>(flat[a]);
    }
    d.poly.add_term(e, rational_from_json(t));
  }
}

void to_json(Json& j, const CanonicalState& s) {
  j = Json{{"label", s.label}, {"state", s.state}};
}

void from_json(const Json& j, CanonicalState& s) {
  s.label = j.at("label").get<CanonicalLabel>();
  s.state = j.at("state").get<StateVector>();
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InvalidArgument("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.front().size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw InvalidArgument("ragged matrix");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& entry = row[c];
      if (entry.is_number()) {
        m(r, c) = entry.get<double>();
      } else if (entry.is_array() && entry.size() == 2) {
        m(r, c) = {entry[0].get<double>(), entry[1].get<double>()};
      } else {
        throw InvalidArgument("matrix entries must be numbers or [re, im] pairs");
      }
    }
  }
  return m;
}

Json canonical_basis_to_json(const CanonicalBasis& basis) {
  Json states = Json::array();
  for (const auto& s : basis.states) {
    Json entry = s;
    if (basis.chain.is_canonical()) entry["gt"] = gt_pattern(s.label, s.state);
    states.push_back(std::move(entry));
  }
  Json runs = Json::array();
  for (const auto& r : basis.runs) {
    runs.push_back({{"m", r.level}, {"irrep", r.irrep.values()}, {"states", r.states},
                    {"lowering_ops", r.lowering_ops}});
  }
  return Json{{"n", basis.n},
              {"irrep", basis.irrep.values()},
              {"chain", basis.chain.levels()},
              {"dimension", basis.size()},
              {"hws", basis.hws},
              {"states", std::move(states)},
              {"runs", std::move(runs)},
              {"lowering_ops", basis.lowering_ops}};
}

}  // namespace irrepforge
