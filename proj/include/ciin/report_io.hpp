// Copyright 2026 The ciin-search Authors
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

#include <nlohmann/json.hpp>

#include "ciin/dynamics.hpp"

namespace ciin {

/// Header: step,p1,p2,p3,p4,queries_so_far,walk_time_so_far
/// p1..p4 are walk-group (marked, opposite, same side, far side) or
/// dual-basis probabilities, depending on the report's basis.
std::string report_to_csv(const RunReport& report);

/// {"basis", "final_success_probability", "oracle_queries",
///  "total_walk_time", "trajectory": [{"step", "probabilities",
///  "queries_so_far", "walk_time_so_far"}, ...]}
nlohmann::json report_to_json(const RunReport& report);

}  // namespace ciin
