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

#include "ciin/report_io.hpp"

namespace ciin {

std::string report_to_csv(const RunReport& report) {
  std::string out = "step,p1,p2,p3,p4,queries_so_far,walk_time_so_far\n";
  for (const auto& s : report.trajectory) {
    out += std::to_string(s.step);
    for (double p : s.probabilities) {
      out += ',';
      out += format_double(p);
    }
    out += ',' + std::to_string(s.queries_so_far) + ',' + format_double(s.walk_time_so_far) + '\n';
  }
  return out;
}

nlohmann::json report_to_json(const RunReport& report) {
  nlohmann::json traj = nlohmann::json::array();
  for (const auto& s : report.trajectory) {
    traj.push_back({{"step", s.step},
                    {"probabilities", s.probabilities},
                    {"queries_so_far", s.queries_so_far},
                    {"walk_time_so_far", s.walk_time_so_far}});
  }
  return {{"basis", report.basis == SampleBasis::Walk ? "walk" : "dual"},
          {"final_success_probability", report.final_success_probability},
          {"oracle_queries", report.oracle_queries},
          {"total_walk_time", report.total_walk_time},
          {"trajectory", std::move(traj)}};
}

}  // namespace ciin
