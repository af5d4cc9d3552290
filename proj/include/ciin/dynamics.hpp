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

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ciin/graph.hpp"
#include "ciin/schedule.hpp"
#include "ciin/types.hpp"

namespace ciin {

/// Walk-basis coordinates of a state in the 4-dimensional search subspace.
struct ReducedState {
  Vec4 amplitudes;

  static ReducedState uniform(GraphSize size) { return {uniform_state(size)}; }
  static ReducedState marked() { return {marked_state()}; }
  double norm() const { return amplitudes.norm(); }
};

/// Vertex amplitudes of the full N-dimensional state.
struct FullState {
  Amplitudes amplitudes;

  static FullState uniform(GraphSize size);
  static FullState vertex(GraphSize size, std::size_t v);
  double norm() const;
};

FullState lift(const ReducedState& state, const WalkBasis& basis);
ReducedState project(const FullState& state, const WalkBasis& basis);

/// exp(-i t A) on the walk basis, assembled from the dual basis.
Mat4 walk_propagator(GraphSize size, double t);
/// exp(-i theta |b1><b1|).
Mat4 oracle_propagator(double theta);
/// Product of the steps, first step rightmost.
Mat4 schedule_matrix(const std::vector<ScheduleStep>& steps, GraphSize size);

ReducedState walk_reduced(const ReducedState& state, double t, GraphSize size);
FullState walk_full(const FullState& state, double t, const FullAdjacency& graph,
                    Exec exec = Exec::Parallel);

ReducedState oracle_phase(const ReducedState& state, double theta);
FullState oracle_phase(const FullState& state, double theta, std::size_t marked);

double success_probability(const ReducedState& state);
double entangled_fidelity(const ReducedState& state);
double success_probability(const FullState& state, const WalkBasis& basis);
double entangled_fidelity(const FullState& state, const WalkBasis& basis);

/// |<a|b>|^2, the gauge-free comparison used throughout.
double fidelity(const Vec4& a, const Vec4& b);
double fidelity(const Amplitudes& a, const Amplitudes& b);

enum class SampleBasis { Walk, Dual };

struct SampleOptions {
  /// 0: use the schedule's iterate length.
  std::size_t sample_every = 0;
  SampleBasis basis = SampleBasis::Walk;
};

struct TrajectorySample {
  std::size_t step = 0;
  std::array<double, 4> probabilities{};
  std::size_t queries_so_far = 0;
  double walk_time_so_far = 0.0;
};

struct RunReport {
  SampleBasis basis = SampleBasis::Walk;
  std::vector<TrajectorySample> trajectory;
  /// P(w), or P(w) + P(w~) when the schedule finishes with MeasureAndCheck.
  double final_success_probability = 0.0;
  std::size_t oracle_queries = 0;
  double total_walk_time = 0.0;
};

template <class State>
struct Run {
  State state;
  RunReport report;
};

/// Applies the steps in list order. Samples at step 0, every
/// `sample_every` steps, and after the last step.
Run<ReducedState> apply_schedule(ReducedState state, const Schedule& schedule, GraphSize size,
                                 SampleOptions options = {});
/// Full-space version. Probabilities are vertex-group totals in the walk
/// basis, or squared dual coordinates of the projected state.
Run<FullState> apply_schedule(FullState state, const Schedule& schedule, const WalkBasis& basis,
                              SampleOptions options = {}, Exec exec = Exec::Parallel);

struct MeasureOutcome {
  std::size_t measured;
  std::size_t reported;
  bool oracle_confirmed;
};

/// Samples a vertex from |state|^2 with a seeded generator, queries the
/// oracle once on it, and reports it or its opposite.
MeasureOutcome measure_and_check(const FullState& state, const WalkBasis& basis, std::uint64_t seed);

}  // namespace ciin
