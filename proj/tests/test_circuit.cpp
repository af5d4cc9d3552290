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

#include <gtest/gtest.h>

#include "ciin/circuit.hpp"
#include "ciin/error.hpp"
#include "ciin/phase_walk.hpp"
#include "oracles.hpp"

namespace ciin {
namespace {

FullState from(const Eigen::VectorXcd& v) { return {Amplitudes(v.data(), v.data() + v.size())}; }

TEST(WalkCircuit, TwoWiresMatchesDenseExponential) {
  for (double t : {0.0, 0.4, 1.7, 5.9}) {
    const Eigen::MatrixXcd u = dense_unitary(walk_circuit(1, t));
    EXPECT_LT((u - testing::dense_expm(testing::dense_ciin(2), t)).cwiseAbs().maxCoeff(), 1e-12) << t;
  }
}

TEST(WalkCircuit, PeriodicEndpoints) {
  for (unsigned m : {1u, 3u}) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << (m + 1));
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
    EXPECT_LT(testing::max_error_up_to_phase(dense_unitary(walk_circuit(m, 0.0)), id), 1e-12);
    EXPECT_LT(testing::max_error_up_to_phase(dense_unitary(walk_circuit(m, 2 * kPi)), id), 1e-10);
  }
  EXPECT_THROW(walk_circuit(0, 1.0), InvalidSize);
}

TEST(WalkCircuit, MatchesDenseExponentialUpToSixWires) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> time(0.0, 2 * kPi);
  for (unsigned m = 1; m <= 6; ++m) {
    const std::size_t n = std::size_t{1} << m;
    const Eigen::MatrixXd a = testing::dense_ciin(n);
    for (int i = 0; i < 20; ++i) {
      const double t = time(rng);
      const Eigen::MatrixXcd u = dense_unitary(walk_circuit(m, t));
      EXPECT_LT(testing::max_error_up_to_phase(u, testing::dense_expm(a, t)), 1e-10) << m << " " << t;
      EXPECT_LT((u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff(), 1e-10);
    }
  }
}

TEST(WalkCircuit, GateListIndependentOfTime) {
  for (unsigned m : {1u, 4u, 12u}) {
    const auto a = walk_circuit(m, 0.1);
    const auto b = walk_circuit(m, 123.0);
    EXPECT_EQ(gate_kinds(a), gate_kinds(b));
    EXPECT_EQ(a.gates.size(), 2u * m + 4u);
  }
}

TEST(WalkCircuit, MatchesFullSpaceWalk) {
  std::mt19937_64 rng(42);
  const auto size = GraphSize::from_side(8);
  const FullState x = from(testing::random_state(rng, 16));
  const auto expect = walk_full(x, 0.7, build_full_adjacency(size));
  for (Exec exec : {Exec::Serial, Exec::Parallel}) {
    const auto got = simulate(walk_circuit(3, 0.7), x, exec);
    for (std::size_t v = 0; v < 16; ++v) EXPECT_LT(std::abs(got.amplitudes[v] - expect.amplitudes[v]), 1e-10);
    EXPECT_NEAR(got.norm(), 1.0, 1e-10);
  }
}

TEST(OracleCircuit, Examples) {
  const FullState u = FullState::uniform(GraphSize::from_side(4));
  const auto flip = simulate(oracle_circuit(2, 0, kPi), u);
  EXPECT_NEAR(std::abs(flip.amplitudes[0] + u.amplitudes[0]), 0.0, 1e-15);
  for (std::size_t v = 1; v < 8; ++v) EXPECT_EQ(flip.amplitudes[v], u.amplitudes[v]);

  const auto r = simulate(oracle_circuit(2, 5, kPi / 2), u);
  EXPECT_NEAR(std::abs(r.amplitudes[5] - std::polar(1.0, -kPi / 2) * u.amplitudes[5]), 0.0, 1e-15);
  for (std::size_t v = 0; v < 8; ++v) {
    if (v != 5) EXPECT_EQ(r.amplitudes[v], u.amplitudes[v]);
  }

  CircuitProgram pair = oracle_circuit(3, 11, 0.9);
  pair.append(oracle_circuit(3, 11, -0.9));
  EXPECT_LT((dense_unitary(pair) - Eigen::MatrixXcd::Identity(16, 16)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_THROW(oracle_circuit(2, 8, 1.0), IndexError);
}

TEST(Simulate, EmptyProgramAndMismatch) {
  std::mt19937_64 rng(43);
  CircuitProgram empty;
  empty.num_wires = 3;
  const FullState x = from(testing::random_state(rng, 8));
  EXPECT_EQ(simulate(empty, x).amplitudes, x.amplitudes);
  EXPECT_THROW(simulate(empty, FullState{Amplitudes(4)}), DimensionMismatch);
}

TEST(CompileSchedule, SingleOracleAndQueryCount) {
  Schedule s;
  s.n = 4;
  s.steps = {ScheduleStep::oracle(kPi)};
  const auto c = compile_schedule(s, 2, 3);
  EXPECT_EQ(oracle_call_count(c), 1u);
  EXPECT_EQ(gate_kinds(c), "XCX");

  const auto det = deterministic_schedule(GraphSize::from_side(16), 3);
  EXPECT_EQ(oracle_call_count(compile_schedule(det, 4, 0)), query_accounting(det).oracle_queries);
  EXPECT_THROW(compile_schedule(deterministic_schedule(GraphSize::from_side(12), 2), 3, 0), UnsupportedSize);
}

TEST(CompileSchedule, AgreesWithReducedAtN8) {
  const auto size = GraphSize::from_side(8);
  const auto s = deterministic_schedule(size, deterministic_p_min(size));
  const auto basis = build_walk_basis(size, 13);
  const auto circ = simulate(compile_schedule(s, 3, 13), FullState::uniform(size));
  const double reduced = apply_schedule(ReducedState::uniform(size), s, size).report.final_success_probability;
  EXPECT_NEAR(success_probability(circ, basis), reduced, 1e-8);
}

TEST(CompileSchedule, AgreesWithDynamicsForM3To10) {
  for (unsigned m = 3; m <= 10; ++m) {
    const auto size = GraphSize::from_side(std::size_t{1} << m);
    const std::size_t marked = (std::size_t{1} << m) + 1;
    const auto basis = build_walk_basis(size, marked);
    const auto s = deterministic_schedule(size, deterministic_p_min(size));
    const auto circ = simulate(compile_schedule(s, m, marked), FullState::uniform(size));
    const auto run = apply_schedule(FullState::uniform(size), s, basis);
    EXPECT_GE(fidelity(circ.amplitudes, run.state.amplitudes), 1 - 1e-9) << m;
    EXPECT_GE(success_probability(circ, basis), 1 - 1e-8) << m;
  }
}

}  // namespace
}  // namespace ciin
