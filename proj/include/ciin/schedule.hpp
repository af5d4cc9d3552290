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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ciin {

enum class StepKind { Walk, Oracle };

/// One factor of an alternating phase-walk product. `parameter` is a walk
/// time for Walk steps and a phase angle (radians) for Oracle steps. Walk
/// times are stored as given, not reduced mod 2 pi.
struct ScheduleStep {
  StepKind kind;
  double parameter;

  static ScheduleStep walk(double t) { return {StepKind::Walk, t}; }
  static ScheduleStep oracle(double theta) { return {StepKind::Oracle, theta}; }

  friend bool operator==(const ScheduleStep&, const ScheduleStep&) = default;
};

enum class FinishingRule {
  None,
  /// Measure, then spend one oracle query to tell w from its opposite.
  MeasureAndCheck,
  /// The finishing map is part of `steps`.
  Coherent,
};

std::string_view to_string(FinishingRule rule);
FinishingRule finishing_rule_from_string(std::string_view s);

/// Steps in chronological order (the first step acts first).
struct Schedule {
  std::size_t n = 0;
  std::size_t p = 0;
  std::string variant = "custom";
  FinishingRule finishing = FinishingRule::None;
  /// Length of one iterate; trajectories sample on these boundaries by
  /// default. Zero means "sample after every step".
  std::size_t steps_per_iterate = 0;
  std::vector<ScheduleStep> steps;

  void append(const std::vector<ScheduleStep>& more) { steps.insert(steps.end(), more.begin(), more.end()); }

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

struct QueryCount {
  std::size_t oracle_queries = 0;
  double total_walk_time = 0.0;
};

/// Oracle steps (+1 for MeasureAndCheck) and the sum of |walk times|.
QueryCount query_accounting(const Schedule& schedule);

/// Line format:
///   SCHEDULE n=<n> p=<p> variant=<name> finish=<none|measure-and-check|coherent> iterate=<len>
///   WALK <t>
///   ORACLE <theta>
/// Numbers use 17 significant digits, so parse(render(s)) == s.
std::string render_schedule(const Schedule& schedule);
Schedule parse_schedule(std::string_view text);

/// %.17g
std::string format_double(double x);

}  // namespace ciin
