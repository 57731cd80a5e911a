// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wlp/json_io.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace wlp {

using nlohmann::json;

namespace {

std::vector<Rational> rationals_from(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw Error(Errc::kParse, std::string("missing array '") + key + "'");
  }
  std::vector<Rational> out;
  for (const json& item : j[key]) {
    if (!item.is_string()) throw Error(Errc::kParse, std::string("'") + key + "' holds a non-string");
    out.push_back(parse_rational(item.get<std::string>()));
  }
  return out;
}

int int_from(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw Error(Errc::kParse, std::string("missing integer '") + key + "'");
  }
  return j[key].get<int>();
}

}  // namespace

json to_json(VertexSet s) { return s.labels(); }

json to_json(const Propagator& p) { return json::array({p.i, p.j}); }

json props_to_json(const WilsonDiagram& w, PropSet props) {
  json out = json::array();
  for (int r : props) out.push_back(to_json(w.prop(r)));
  return out;
}

json matroid_to_json(const Matroid& m) {
  std::vector<std::vector<int>> bases;
  bases.reserve(m.bases().size());
  for (VertexSet b : m.bases()) bases.push_back(b.labels());
  std::sort(bases.begin(), bases.end());
  return {{"n", m.n()}, {"rank", m.rank()}, {"bases", bases}};
}

Matroid matroid_from_json(const json& j) {
  const int n = int_from(j, "n");
  if (!j.contains("bases") || !j["bases"].is_array()) {
    throw Error(Errc::kParse, "missing array 'bases'");
  }
  if (n < 0 || n > kMaxVertices) throw Error(Errc::kOutOfRange, "ground set size out of range");
  std::vector<VertexSet> bases;
  for (const json& b : j["bases"]) {
    VertexSet s;
    for (const json& e : b) {
      if (!e.is_number_integer() || e.get<int>() < 1 || e.get<int>() > n) {
        throw Error(Errc::kOutOfRange, "basis element outside 1..n");
      }
      s = s.with(e.get<int>());
    }
    bases.push_back(s);
  }
  Matroid m = Matroid::from_bases(n, std::move(bases));
  if (j.contains("rank") && int_from(j, "rank") != m.rank()) {
    throw Error(Errc::kParse, "'rank' disagrees with the basis size");
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

json config_to_json(const TwistorConfig& z) {
  json t = json::array();
  for (const Rational& q : z.t) t.push_back(to_string(q));
  json star = json::array();
  for (const Rational& q : z.star) star.push_back(to_string(q));
  json out = {{"n", z.n}, {"k", z.k}, {"t", t}, {"star", star}};
  if (z.t.empty()) out["rows"] = matrix_to_json(z.rows);
  return out;
}

TwistorConfig config_from_json(const json& j) {
  TwistorConfig z;
  z.n = int_from(j, "n");
  z.k = int_from(j, "k");
  z.star = rationals_from(j, "star");
  const bool explicit_rows = j.contains("rows");
  if (!explicit_rows) z.t = rationals_from(j, "t");
  if (z.n < 1 || z.k < 0 || static_cast<int>(z.star.size()) != z.width() ||
      (!explicit_rows && static_cast<int>(z.t.size()) != z.n)) {
    throw Error(Errc::kInvalidConfig, "configuration sizes disagree with n and k");
  }
  z.rows = Matrix(z.n, z.width());
  if (explicit_rows) {
    const json& rows = j["rows"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != z.n) {
      throw Error(Errc::kInvalidConfig, "'rows' must hold n rows");
    }
    for (int v = 0; v < z.n; ++v) {
      const std::vector<Rational> row = rationals_from(json{{"row", rows[v]}}, "row");
      if (static_cast<int>(row.size()) != z.width()) {
        throw Error(Errc::kInvalidConfig, "twistor row has the wrong length");
      }
      for (int c = 0; c < z.width(); ++c) z.rows(v, c) = row[c];
    }
    return z;
  }
  for (int v = 0; v < z.n; ++v) {
    Rational power = 1;
    for (int c = 0; c < z.width(); ++c) {
      z.rows(v, c) = power;
      power *= z.t[v];
    }
  }
  return z;
}

json realization_to_json(const WilsonDiagram& w, const RealizedMatrix& rm) {
  json out;
  const int rank = rank_of(rm.m);
  if (rank == w.k()) {
    out = matroid_to_json(matroid_of_matrix(rm.m));
  } else {
    out = {{"n", w.n()}, {"rank", rank}, {"bases", json::array()}};
  }
  out["diagram"] = w.to_string();
  out["C"] = matrix_to_json(rm.c);
  out["M"] = matrix_to_json(rm.m);
  return out;
}

json report_to_json(const WilsonDiagram& w, const AdmissibilityVerdict& v,
                    const std::optional<Matroid>& matroid) {
  json out;
  out["schema"] = kReportSchema;
  out["diagram"] = w.to_string();
  out["definedness"] = std::string(definedness_name(v.definedness.tag));
  out["witness"] = props_to_json(w, v.definedness.witness);
  out["well_defined"] = v.well_defined;
  out["admissible"] = v.admissible;
  out["route"] = std::string(route_name(v.route));

  json crossings = json::array();
  for (auto [a, b] : v.crossings) {
    crossings.push_back(json::array({to_json(w.prop(a)), to_json(w.prop(b))}));
  }
  out["crossings"] = crossings;

  if (!v.well_defined) {
    out["connected"] = nullptr;
    out["positroid"] = nullptr;
    out["components"] = json::array();
    out["flacets"] = json::array();
    out["matroid"] = nullptr;
    out["untangled"] = nullptr;
    return out;
  }
  out["connected"] = v.connected;
  out["positroid"] = v.positroid;
  json components = json::array();
  for (const WilsonComponent& c : v.components) {
    components.push_back({{"props", props_to_json(w, c.props)}, {"vertices", to_json(c.vertices)}});
  }
  out["components"] = components;
  json flacets = json::array();
  for (const FlacetRecord& f : v.flacets) {
    flacets.push_back({{"props", props_to_json(w, f.props)},
                       {"flat", to_json(f.flat)},
                       {"cyclic_interval", f.cyclic_interval}});
  }
  out["flacets"] = flacets;
  if (matroid) {
    out["matroid"] = {{"rank", matroid->rank()}, {"bases", matroid->bases().size()}};
  } else {
    out["matroid"] = nullptr;
  }
  out["untangled"] = v.untangled ? json(v.untangled->to_string()) : json(nullptr);
  return out;
}

}  // namespace wlp
