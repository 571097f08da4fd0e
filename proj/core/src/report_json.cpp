// Copyright 2026 The metdim Authors
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

#include "metdim/report_json.hpp"

#include <json.hpp>

namespace metdim {

namespace {

using Json = nlohmann::ordered_json;

Json verdict_object(const CharacterizationVerdict& v) {
  return Json{{"n", v.n},
              {"D", v.diameter},
              {"beta_expected", v.beta_expected()},
              {"accepted", v.accepted},
              {"case_label", v.case_label},
              {"alpha", v.alpha}};
}

}  // namespace

std::string verdict_json(const CharacterizationVerdict& v) {
  return verdict_object(v).dump();
}

std::string report_json(const VerificationReport& r) {
  return Json{{"graph6", r.graph6},
              {"n", r.n},
              {"D", r.diameter},
              {"beta", r.beta},
              {"verdict", verdict_object(r.verdict)},
              {"agrees", r.agrees}}
      .dump();
}

std::string summary_json(const VerificationSummary& s) {
  Json labels = Json::object();
  for (const auto& [label, count] : s.by_label) labels[label] = count;
  return Json{{"n_max", s.n_max},
              {"graphs", s.graphs},
              {"disagreements", s.disagreements},
              {"by_label", labels},
              {"counterexamples", s.counterexamples}}
      .dump();
}

std::string bounds_json(const BoundsSummary& b) {
  Json rows = Json::array();
  for (const auto& r : b.rows) {
    rows.push_back(Json{{"beta", r.beta},
                        {"D", r.diameter},
                        {"graphs", r.graphs},
                        {"min_n", r.min_order},
                        {"max_n", r.max_order},
                        {"formula_min", r.formula_min},
                        {"formula_max", r.formula_max},
                        {"min_ok", r.min_ok},
                        {"max_ok", r.max_ok}});
  }
  return Json{{"n_max", b.n_max}, {"ok", b.ok}, {"rows", rows}}.dump();
}

std::string max_graph_sidecar_json(const MaxGraph& mg) {
  Json points = Json::array();
  for (const auto& p : mg.points) points.push_back(p.coords);
  return Json{{"beta", mg.params.beta},
              {"D", mg.params.diameter},
              {"A", mg.params.a},
              {"B", mg.params.b},
              {"points", points},
              {"basis", mg.basis}}
      .dump();
}

}  // namespace metdim
