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

#include "ciin/dynamics.hpp"

#include <cmath>
#include <random>
#include <string>

#include "ciin/error.hpp"
#include "ciin/kernels.hpp"

namespace ciin {

FullState FullState::uniform(GraphSize size) {
  const std::size_t dim = size.vertex_count();
  return {Amplitudes(dim, Complex(1.0 / std::sqrt(static_cast<double>(dim)), 0.0))};
}

FullState FullState::vertex(GraphSize size, std::size_t v) {
  if (v >= size.vertex_count()) throw IndexError("vertex " + std::to_string(v) + " out of range");
  Amplitudes a(size.vertex_count(), 0.0);
  a[v] = 1.0;
  return {std::move(a)};
}

double FullState::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

FullState lift(const ReducedState& state, const WalkBasis& basis) { return {basis.lift(state.amplitudes)}; }

ReducedState project(const FullState& state, const WalkBasis& basis) {
  return {basis.project(state.amplitudes)};
}

Mat4 walk_propagator(GraphSize size, double t) {
  const DualBasis d = dual_basis(size);
  Mat4 phases = Mat4::Zero();
  for (int k = 0; k < 4; ++k) phases(k, k) = std::polar(1.0, -t * d.eigenvalues[static_cast<std::size_t>(k)]);
  const Mat4 v = d.vectors.cast<Complex>();
  return v * phases * v.transpose();
}

Mat4 oracle_propagator(double theta) {
  Mat4 u = Mat4::Identity();
  u(0, 0) = std::polar(1.0, -theta);
  return u;
}

Mat4 schedule_matrix(const std::vector<ScheduleStep>& steps, GraphSize size) {
  Mat4 u = Mat4::Identity();
  for (const auto& step : steps) {
    u = (step.kind == StepKind::Walk ? walk_propagator(size, step.parameter) : oracle_propagator(step.parameter)) * u;
  }
  return u;
}

ReducedState walk_reduced(const ReducedState& state, double t, GraphSize size) {
  const DualBasis d = dual_basis(size);
  Vec4 c = d.to_dual(state.amplitudes);
  for (int k = 0; k < 4; ++k) c(k) *= std::polar(1.0, -t * d.eigenvalues[static_cast<std::size_t>(k)]);
  return {d.to_walk(c)};
}

FullState walk_full(const FullState& state, double t, const FullAdjacency& graph, Exec exec) {
  if (state.amplitudes.size() != graph.size().vertex_count()) {
    throw DimensionMismatch("walk_full: state has " + std::to_string(state.amplitudes.size()) +
                            " amplitudes, graph has " + std::to_string(graph.size().vertex_count()) + " vertices");
  }
  FullState out = state;
  kernels::walk(exec, out.amplitudes, graph.size().n(), t);
  return out;
}

ReducedState oracle_phase(const ReducedState& state, double theta) {
  ReducedState out = state;
  out.amplitudes(0) *= std::polar(1.0, -theta);
  return out;
}

FullState oracle_phase(const FullState& state, double theta, std::size_t marked) {
  if (marked >= state.amplitudes.size()) throw IndexError("marked vertex out of range");
  FullState out = state;
  out.amplitudes[marked] *= std::polar(1.0, -theta);
  return out;
}

double success_probability(const ReducedState& state) { return std::norm(state.amplitudes(0)); }

double entangled_fidelity(const ReducedState& state) {
  return 0.5 * std::norm(state.amplitudes(0) + state.amplitudes(1));
}

double success_probability(const FullState& state, const WalkBasis& basis) {
  return std::norm(state.amplitudes.at(basis.marked()));
}

double entangled_fidelity(const FullState& state, const WalkBasis& basis) {
  return 0.5 * std::norm(state.amplitudes.at(basis.marked()) + state.amplitudes.at(basis.opposite()));
}

double fidelity(const Vec4& a, const Vec4& b) { return std::norm(a.dot(b)); }

double fidelity(const Amplitudes& a, const Amplitudes& b) {
  if (a.size() != b.size()) throw DimensionMismatch("fidelity: dimension mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return std::norm(s);
}

namespace {

std::array<double, 4> squared(const Vec4& c) {
  return {std::norm(c(0)), std::norm(c(1)), std::norm(c(2)), std::norm(c(3))};
}

std::size_t effective_stride(const Schedule& s, const SampleOptions& o) {
  if (o.sample_every > 0) return o.sample_every;
  return s.steps_per_iterate > 0 ? s.steps_per_iterate : 1;
}

// Shared driver; `apply` advances the state by one step and `probs` reads
// the sampled quantities.
template <class State, class Apply, class Probs, class Success>
Run<State> drive(State state, const Schedule& schedule, const SampleOptions& options, Apply apply,
                 Probs probs, Success success) {
  RunReport r;
  r.basis = options.basis;
  const std::size_t stride = effective_stride(schedule, options);
  std::size_t queries = 0;
  double walk_time = 0.0;
  r.trajectory.push_back({0, probs(state), 0, 0.0});
  const std::size_t total = schedule.steps.size();
  for (std::size_t i = 0; i < total; ++i) {
    const auto& step = schedule.steps[i];
    apply(state, step);
    if (step.kind == StepKind::Oracle) ++queries;
    else walk_time += std::abs(step.parameter);
    const std::size_t done = i + 1;
    if (done % stride == 0 || done == total) r.trajectory.push_back({done, probs(state), queries, walk_time});
  }
  const QueryCount q = query_accounting(schedule);
  r.oracle_queries = q.oracle_queries;
  r.total_walk_time = q.total_walk_time;
  r.final_success_probability = success(state, schedule.finishing == FinishingRule::MeasureAndCheck);
  return {std::move(state), std::move(r)};
}

}  // namespace

Run<ReducedState> apply_schedule(ReducedState state, const Schedule& schedule, GraphSize size,
                                 SampleOptions options) {
  const DualBasis dual = dual_basis(size);
  auto apply = [&](ReducedState& s, const ScheduleStep& step) {
    s = step.kind == StepKind::Walk ? walk_reduced(s, step.parameter, size) : oracle_phase(s, step.parameter);
  };
  auto probs = [&](const ReducedState& s) {
    return squared(options.basis == SampleBasis::Walk ? s.amplitudes : dual.to_dual(s.amplitudes));
  };
  auto success = [](const ReducedState& s, bool check) {
    return check ? std::norm(s.amplitudes(0)) + std::norm(s.amplitudes(1)) : success_probability(s);
  };
  return drive(std::move(state), schedule, options, apply, probs, success);
}

Run<FullState> apply_schedule(FullState state, const Schedule& schedule, const WalkBasis& basis,
                              SampleOptions options, Exec exec) {
  if (state.amplitudes.size() != basis.size().vertex_count()) {
    throw DimensionMismatch("apply_schedule: state dimension does not match the graph");
  }
  const DualBasis dual = dual_basis(basis.size());
  const std::size_t n = basis.size().n();
  auto apply = [&](FullState& s, const ScheduleStep& step) {
    if (step.kind == StepKind::Walk) {
      kernels::walk(exec, s.amplitudes, n, step.parameter);
    } else {
      s.amplitudes[basis.marked()] *= std::polar(1.0, -step.parameter);
    }
  };
  auto probs = [&](const FullState& s) {
    if (options.basis == SampleBasis::Walk) return basis.group_probabilities(s.amplitudes);
    return squared(dual.to_dual(basis.project(s.amplitudes)));
  };
  auto success = [&](const FullState& s, bool check) {
    return check ? std::norm(s.amplitudes[basis.marked()]) + std::norm(s.amplitudes[basis.opposite()])
                 : success_probability(s, basis);
  };
  return drive(std::move(state), schedule, options, apply, probs, success);
}

MeasureOutcome measure_and_check(const FullState& state, const WalkBasis& basis, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // 53-bit uniform in [0, 1); avoids implementation-defined distributions.
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  double total = 0.0;
  for (const auto& a : state.amplitudes) total += std::norm(a);
  double acc = 0.0;
  std::size_t measured = state.amplitudes.size() - 1;
  for (std::size_t v = 0; v < state.amplitudes.size(); ++v) {
    acc += std::norm(state.amplitudes[v]) / total;
    if (u < acc) {
      measured = v;
      break;
    }
  }
  const bool hit = measured == basis.marked();
  const std::size_t reported = hit ? measured : (measured + basis.size().n()) % basis.size().vertex_count();
  return {measured, reported, hit};
}

}  // namespace ciin
