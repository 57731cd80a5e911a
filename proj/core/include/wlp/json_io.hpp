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

// JSON forms of matroids, configurations, realizations and reports. Keys
// come out sorted and lists in canonical order, so equal values serialize
// to identical bytes.

#ifndef WLP_JSON_IO_HPP_
#define WLP_JSON_IO_HPP_

#include <nlohmann/json.hpp>

#include <optional>

#include "wlp/diagram.hpp"
#include "wlp/matroid.hpp"
#include "wlp/realization.hpp"
#include "wlp/wilson_matroid.hpp"

namespace wlp {

inline constexpr int kReportSchema = 1;

nlohmann::json to_json(VertexSet s);
nlohmann::json to_json(const Propagator& p);
nlohmann::json props_to_json(const WilsonDiagram& w, PropSet props);

// {"n", "rank", "bases"} with bases in lexicographic order.
nlohmann::json matroid_to_json(const Matroid& m);
// Validates through Matroid::from_bases; throws Error(kParse) on shape errors.
Matroid matroid_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix& m);

// {"n", "k", "t", "star"}; rationals as "p/q". Hand-built configurations
// (empty t) also carry "rows".
nlohmann::json config_to_json(const TwistorConfig& z);
// Takes "rows" when present, else rebuilds the moment-curve rows from "t".
// Does not validate genericity.
TwistorConfig config_from_json(const nlohmann::json& j);

// The matroid of M (when M has full rank) plus the entries of C and M.
nlohmann::json realization_to_json(const WilsonDiagram& w, const RealizedMatrix& rm);

// The classification report; `matroid` adds the rank and basis count.
nlohmann::json report_to_json(const WilsonDiagram& w, const AdmissibilityVerdict& v,
                              const std::optional<Matroid>& matroid);

}  // namespace wlp

#endif  // WLP_JSON_IO_HPP_
