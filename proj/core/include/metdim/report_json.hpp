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

#pragma once

#include <string>

#include "metdim/characterize.hpp"
#include "metdim/enumerate.hpp"
#include "metdim/extremal.hpp"

namespace metdim {

// Compact single-line JSON documents. Key order is fixed, so equal inputs
// give byte-identical output.

// {"n","D","beta_expected","accepted","case_label","alpha"}
std::string verdict_json(const CharacterizationVerdict& v);
// {"graph6","n","D","beta","verdict","agrees"}
std::string report_json(const VerificationReport& r);
// {"n_max","graphs","disagreements","by_label","counterexamples"}
std::string summary_json(const VerificationSummary& s);
// {"n_max","ok","rows":[{"beta","D","graphs","min_n","max_n",...}]}
std::string bounds_json(const BoundsSummary& b);
// {"beta","D","A","B","points":[[..],..],"basis":[..]}; basis entries are
// vertex indices into points.
std::string max_graph_sidecar_json(const MaxGraph& mg);

}  // namespace metdim
