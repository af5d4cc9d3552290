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

#include "ciin/dynamics.hpp"
#include "ciin/error.hpp"
#include "ciin/phase_walk.hpp"
#include "oracles.hpp"

namespace ciin {
namespace {

Mat4 in_dual(const Mat4& m, GraphSize size) {
  const Mat4 v = dual_basis(size).vectors.cast<Complex>();
  return v.adjoint() * m * v;
}

double final_reduced(const Schedule& s, GraphSize size) {
  return apply_schedule(ReducedState::uniform(size), s, size).report.final_success_probability;
}

double final_full(const Schedule& s, GraphSize size, std::size_t marked) {
  const auto basis = build_walk_basis(size, marked);
  return apply_schedule(FullState::uniform(size), s, basis).report.final_success_probability;
}

// 2x2 block of a dual-coordinate operator on the plane spanned by a, b.
Eigen::Matrix2cd block(const Mat4& d, const Vec4& a, const Vec4& b) {
  Eigen::Matrix2cd out;
  const std::array<Vec4, 2> e{a, b};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out(r, c) = e[static_cast<std::size_t>(r)].dot(d * e[static_cast<std::size_t>(c)]);
  return out;
}

// Checks the closed-form eigenpairs against the assembled operator.
void expect_spectrum(IterateKind kind, GraphSize size, double theta) {
  const auto sp = iterate_spectrum(kind, size, theta);
  const Mat4 d = in_dual(iterate_matrix(kind, size, theta), size);
  std::array<Complex, 2> values{};
  for (std::size_t k = 0; k < 2; ++k) {
    const Vec4& v = sp.eigenstates[k];
    values[k] = v.dot(d * v);
    EXPECT_LT((d * v - values[k] * v).norm(), 1e-10) << size.n() << " " << theta;
    EXPECT_NEAR(std::abs(values[k]), 1.0, 1e-10);
  }
  // the eigenstate listed first carries +lambda
  const Complex ratio = values[0] / values[1];
  EXPECT_LT(std::abs(ratio - std::polar(1.0, 2.0 * sp.lambda_plus)), 1e-10) << size.n() << " " << theta;
  EXPECT_DOUBLE_EQ(sp.lambda_minus, -sp.lambda_plus);

  // the block's own eigenvalues agree too
  const Eigen::Matrix2cd b = block(d, sp.plane[0], sp.plane[1]);
  Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(b);
  const Complex r2 = es.eigenvalues()(0) / es.eigenvalues()(1);
  const double lam = std::abs(std::arg(r2)) / 2.0;
  EXPECT_NEAR(lam, std::abs(sp.lambda_plus), 1e-10);
}

TEST(ApproxParams, MultipleOfFour) {
  for (std::size_t n = 4; n <= 1024; n += 4) {
    const auto a = approx_params(GraphSize::from_side(n));
    EXPECT_DOUBLE_EQ(a.t1, kPi / 2) << n;
    EXPECT_DOUBLE_EQ(a.t2, kPi / static_cast<double>(n)) << n;
    EXPECT_GT(a.lambda_plus, 0.0);
    EXPECT_LE(a.lambda_plus, kPi / 2);
  }
  const auto a = approx_params(GraphSize::from_side(1024));
  EXPECT_NEAR(a.lambda_plus, 2.0 * std::sqrt(1023.0) / 1024.0, 1e-4);
  EXPECT_EQ(a.p, 25u);
  EXPECT_DOUBLE_EQ(a.t3, kPi / 2048 - a.t2 / 2);
  EXPECT_THROW(approx_params(GraphSize::from_side(2)), InvalidSize);
}

TEST(ApproxParams, HalfIntegerTieRoundsUpAndIsNoWorse) {
  for (std::size_t n = 6; n <= 102; n += 4) {
    const auto size = GraphSize::from_side(n);
    const auto chosen = approx_params(size);
    EXPECT_EQ(chosen.k_transfer, (n + 2) / 4) << n;
    auto overlap = [&](std::size_t k) {
      ApproxParams a = chosen;
      a.t1 = 2 * kPi * static_cast<double>(k) / static_cast<double>(n);
      a.t2 = -(2.0 / n) * std::atan((n - 2.0) / n * std::tan(a.t1));
      const Mat4 d = in_dual(schedule_matrix(approx_iterate(a), size), size);
      const Mat4 d2 = d * d;
      return std::norm(d2(3, 0));
    };
    EXPECT_GE(overlap(chosen.k_transfer), overlap(chosen.k_transfer - 1) - 1e-12) << n;
  }
}

TEST(DeterministicParams, FrozenValues) {
  const auto d12 = deterministic_params(GraphSize::from_side(12), 2);
  EXPECT_EQ(d12.p_min, 2u);
  EXPECT_NEAR(d12.theta, 1.2086182405656534, 1e-13);
  EXPECT_NEAR(d12.gamma, 0.52213579422296008, 1e-13);
  EXPECT_DOUBLE_EQ(d12.t3, kPi / 24 - d12.gamma / 12);
  const auto d8 = deterministic_params(GraphSize::from_side(8), 1);
  EXPECT_EQ(d8.p_min, 1u);
  EXPECT_NEAR(d8.theta, 2.0687084948066108, 1e-13);
  EXPECT_NEAR(d8.gamma, 0.90045816107033272, 1e-13);
  const auto d64 = deterministic_params(GraphSize::from_side(64), 3);
  EXPECT_EQ(d64.p_min, 3u);
  EXPECT_NEAR(d64.theta, 2.58770601500721, 1e-13);
  EXPECT_NEAR(d64.gamma, 1.2853898009518709, 1e-13);
}

TEST(DeterministicParams, ThetaRealExactlyFromPMin) {
  for (std::size_t n = 8; n <= 256; n += 4) {
    const auto size = GraphSize::from_side(n);
    const std::size_t pm = deterministic_p_min(size);
    if (pm > 1) EXPECT_THROW(deterministic_params(size, pm - 1), ThetaNotReal) << n;
    const auto d = deterministic_params(size, pm);
    EXPECT_TRUE(std::isfinite(d.theta));
    const double lam = iterate_spectrum(IterateKind::Deterministic, size, d.theta).lambda_plus;
    EXPECT_NEAR(static_cast<double>(pm) * lam, std::acos(1.0 / std::sqrt(static_cast<double>(n))), 1e-12) << n;
  }
  EXPECT_THROW(deterministic_params(GraphSize::from_side(10), 3), UnsupportedSize);
  EXPECT_THROW(deterministic_schedule(GraphSize::from_side(12), 1), ThetaNotReal);
}

TEST(MappingParams, FrozenValues) {
  for (std::size_t n : {8u, 16u, 1024u}) EXPECT_NEAR(mapping_params(GraphSize::from_side(n)).phi, kPi / 2, 1e-12);
  const auto m12 = mapping_params(GraphSize::from_side(12));
  EXPECT_EQ(m12.j, 1u);
  EXPECT_EQ(m12.k, 2u);
  EXPECT_NEAR(m12.phi, 1.9106332362490184, 1e-13);
  const auto m20 = mapping_params(GraphSize::from_side(20));
  EXPECT_EQ(m20.j, 2u);
  EXPECT_EQ(m20.k, 3u);
  EXPECT_NEAR(m20.phi, 1.676566238344235, 1e-13);
  EXPECT_THROW(mapping_params(GraphSize::from_side(7)), NoValidPair);
}

TEST(MappingParams, RadicandsNonNegativeUpTo4096) {
  for (std::size_t n = 8; n <= 4096; ++n) {
    EXPECT_NO_THROW(mapping_params(GraphSize::from_side(n))) << n;
  }
}

TEST(OddParams, FrozenValues) {
  const auto o9 = odd_params(GraphSize::from_side(9), 2);
  EXPECT_EQ(o9.p_min, 2u);
  EXPECT_NEAR(o9.theta_odd, 1.3092091699881991, 1e-13);
  EXPECT_NEAR(o9.phi_odd, 0.6958044967324275, 1e-13);
  EXPECT_NEAR(o9.gamma_odd, 1.494830426500265, 1e-13);
  EXPECT_EQ(o9.grover_iterations, 2u);
  EXPECT_DOUBLE_EQ(o9.xi_unwind_time, -kPi * 9 / 4);
  const auto o1025 = odd_params(GraphSize::from_side(1025), 13);
  EXPECT_EQ(o1025.p_min, 13u);
  EXPECT_NEAR(o1025.theta_odd, 2.6263548556276528, 1e-13);
  EXPECT_NEAR(o1025.phi_odd, 0.50662276720132804, 1e-13);
  EXPECT_NEAR(o1025.gamma_odd, 1.3193775892149102, 1e-13);
  EXPECT_EQ(o1025.grover_iterations, 25u);
  EXPECT_THROW(odd_params(GraphSize::from_side(9), 1), ThetaNotReal);
  EXPECT_THROW(odd_params(GraphSize::from_side(8), 2), UnsupportedSize);
  EXPECT_THROW(odd_schedule(GraphSize::from_side(10), false), UnsupportedSize);
}

TEST(Iterate, SubspaceClosure) {
  for (std::size_t n = 4; n <= 64; n += 4) {
    const auto size = GraphSize::from_side(n);
    std::vector<Mat4> ops{in_dual(iterate_matrix(IterateKind::Approximate, size, 0.0), size)};
    if (n >= 8) ops.push_back(in_dual(iterate_matrix(IterateKind::Deterministic, size, deterministic_params(size, deterministic_p_min(size)).theta), size));
    for (const Mat4& d : ops) {
      for (int out : {1, 2}) {
        for (int in : {0, 3}) EXPECT_LT(std::abs(d(out, in)), 1e-12) << n;
      }
    }
  }
  for (std::size_t n = 3; n <= 63; n += 2) {
    const auto size = GraphSize::from_side(n);
    const Mat4 d = in_dual(schedule_matrix({ScheduleStep::oracle(kPi), ScheduleStep::walk(kPi / 2),
                                            ScheduleStep::oracle(kPi), ScheduleStep::walk(kPi / 2)}, size), size);
    const Vec4 xi = xi_state(size);
    Vec4 b1 = Vec4::Zero();
    b1(0) = 1.0;
    for (const Vec4& v : {b1, xi}) {
      const Vec4 image = d * v;
      const Vec4 rest = image - b1 * b1.dot(image) - xi * xi.dot(image);
      EXPECT_LT(rest.norm(), 1e-12) << n;
    }
  }
}

TEST(Iterate, GroverBlockOfSimpleOddIterate) {
  const auto size5 = GraphSize::from_side(5);
  const Mat4 u2 = in_dual(schedule_matrix({ScheduleStep::oracle(kPi), ScheduleStep::walk(kPi / 2),
                                           ScheduleStep::oracle(kPi), ScheduleStep::walk(kPi / 2)}, size5), size5);
  // (n-2)/n up to the global phase -1
  EXPECT_NEAR(std::abs(u2(0, 0) + 0.6), 0.0, 1e-12);
  for (std::size_t n : {5u, 9u, 31u}) {
    const auto size = GraphSize::from_side(n);
    const Mat4 d = in_dual(schedule_matrix({ScheduleStep::oracle(kPi), ScheduleStep::walk(kPi / 2),
                                            ScheduleStep::oracle(kPi), ScheduleStep::walk(kPi / 2)}, size), size);
    Vec4 b1 = Vec4::Zero();
    b1(0) = 1.0;
    Eigen::Matrix2cd b = -block(d, b1, xi_state(size));
    const double c = (n - 2.0) / n;
    const double s = 2.0 * std::sqrt(n - 1.0) / n;
    Eigen::Matrix2cd grover;
    grover << c, -s, s, c;
    EXPECT_LT((b - grover).cwiseAbs().maxCoeff(), 1e-12) << n;
  }
}

TEST(Iterate, EigenphasesMatchClosedForm) {
  std::mt19937_64 rng(31);
  for (std::size_t n = 8; n <= 64; n += 4) {
    const auto size = GraphSize::from_side(n);
    expect_spectrum(IterateKind::Approximate, size, 0.0);
    expect_spectrum(IterateKind::Deterministic, size, kPi);
    const double lo = deterministic_params(size, deterministic_p_min(size)).theta;
    std::uniform_real_distribution<double> theta(0.05, lo);
    for (int i = 0; i < 20; ++i) expect_spectrum(IterateKind::Deterministic, size, theta(rng));
  }
  for (std::size_t n = 6; n <= 30; n += 4) expect_spectrum(IterateKind::Approximate, GraphSize::from_side(n), 0.0);
  for (std::size_t n = 9; n <= 63; n += 2) {
    const auto size = GraphSize::from_side(n);
    const double lo = odd_params(size, odd_p_min(size)).theta_odd;
    std::uniform_real_distribution<double> theta(0.05, lo);
    for (int i = 0; i < 5; ++i) expect_spectrum(IterateKind::Odd, size, theta(rng));
  }
  const auto sp = iterate_spectrum(IterateKind::Deterministic, GraphSize::from_side(20), kPi);
  EXPECT_NEAR(sp.lambda_plus, 2.0 * std::asin(2.0 * std::sqrt(19.0) / 20.0), 1e-15);
}

TEST(Iterate, ThetaPiReducesToApproximate) {
  for (std::size_t n = 4; n <= 64; n += 4) {
    const auto size = GraphSize::from_side(n);
    const Mat4 half = schedule_matrix(deterministic_half_iterate(size, kPi), size);
    const Mat4 approx = iterate_matrix(IterateKind::Approximate, size, 0.0);
    EXPECT_LT((half - approx).cwiseAbs().maxCoeff(), 1e-12) << n;
  }
}

TEST(Iterate, MatchesHandAssembledProduct) {
  const auto size = GraphSize::from_side(12);
  const double th = 0.7;
  const Mat4 expect = walk_propagator(size, kPi / 12) * oracle_propagator(-th) * walk_propagator(size, kPi / 2) *
                      oracle_propagator(-th) * walk_propagator(size, kPi / 12) * oracle_propagator(th) *
                      walk_propagator(size, kPi / 2) * oracle_propagator(th);
  EXPECT_LT((iterate_matrix(IterateKind::Deterministic, size, th) - expect).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(DeterministicSearch, ExactForAllMultiplesOfFour) {
  for (std::size_t n = 8; n <= 64; n += 4) {
    const auto size = GraphSize::from_side(n);
    const std::size_t pm = deterministic_p_min(size);
    for (std::size_t p = pm; p <= pm + 5; ++p) {
      const auto s = deterministic_schedule(size, p);
      EXPECT_GE(final_reduced(s, size), 1 - 1e-9) << n << " " << p;
      EXPECT_GE(final_full(s, size, (3 * n) % (2 * n - 1)), 1 - 1e-8) << n << " " << p;
    }
  }
}

TEST(DeterministicSearch, Fig6ReachesTargetAtSecondIterate) {
  const auto size = GraphSize::from_side(12);
  const auto s = deterministic_schedule(size, 2);
  const auto run = apply_schedule(ReducedState::uniform(size), s, size, {0, SampleBasis::Dual});
  ASSERT_GE(run.report.trajectory.size(), 3u);
  EXPECT_EQ(run.report.trajectory[2].step, 16u);
  EXPECT_NEAR(run.report.trajectory[2].probabilities[0], 1.0 / 12, 1e-9);
  EXPECT_GT(std::abs(run.report.trajectory[1].probabilities[0] - 1.0 / 12), 1e-3);
  EXPECT_EQ(run.report.oracle_queries, 10u);
  EXPECT_NEAR(run.report.final_success_probability, 1.0, 1e-9);
}

TEST(DeterministicSearch, MonotoneAmplificationTowardB4) {
  for (std::size_t n : {8u, 12u, 32u, 64u, 400u}) {
    const auto size = GraphSize::from_side(n);
    const auto d = deterministic_params(size, deterministic_p_min(size) + 1);
    const Mat4 u = in_dual(iterate_matrix(IterateKind::Deterministic, size, d.theta), size);
    Vec4 x = Vec4::Zero();
    x(0) = 1.0;
    double last = -1.0;
    for (std::size_t j = 0; j <= d.p; ++j) {
      const double overlap = std::norm(x(3));
      EXPECT_GT(overlap, last) << n << " " << j;
      last = overlap;
      x = u * x;
    }
  }
}

TEST(FinishingMap, ForwardProducesRelativePhaseGamma) {
  for (std::size_t n : {8u, 12u, 16u, 20u, 100u}) {
    const auto size = GraphSize::from_side(n);
    const auto m = mapping_params(size);
    auto steps = marked_to_entangled(size);
    ASSERT_EQ(steps.size(), 4u);
    steps.pop_back();
    const Vec4 out = schedule_matrix(steps, size) * marked_state();
    Vec4 expect = Vec4::Zero();
    expect(0) = 1.0 / std::sqrt(2.0);
    expect(1) = std::polar(1.0 / std::sqrt(2.0), m.gamma_map);
    EXPECT_NEAR(fidelity(out, expect), 1.0, 1e-12) << n;
    const Vec4 full = schedule_matrix(marked_to_entangled(size), size) * marked_state();
    EXPECT_NEAR(fidelity(full, entangled_target()), 1.0, 1e-12) << n;
    const Vec4 back = schedule_matrix(entangled_to_marked(size), size) * entangled_target();
    EXPECT_NEAR(std::norm(back(0)), 1.0, 1e-12) << n;
  }
}

TEST(ApproxSearch, FidelityAndAccounting) {
  const std::vector<std::pair<std::size_t, double>> frozen = {
      {6, 0.937}, {10, 0.9988}, {14, 0.9397}, {64, 0.9965856807868436}, {256, 0.9999470421032036},
      {1024, 0.9994612447447437}};
  for (const auto& [n, f] : frozen) {
    const auto size = GraphSize::from_side(n);
    const auto run = apply_schedule(ReducedState::uniform(size), approx_schedule(size, FinishingRule::None), size);
    EXPECT_NEAR(entangled_fidelity(run.state), f, n < 64 ? 1e-3 : 1e-12) << n;
    const auto a = approx_params(size);
    const auto coherent = approx_schedule(size);
    EXPECT_EQ(query_accounting(coherent).oracle_queries, 2 * a.p + 1) << n;
    EXPECT_EQ(query_accounting(approx_schedule(size, FinishingRule::MeasureAndCheck)).oracle_queries, 2 * a.p + 1);
  }
  const auto size = GraphSize::from_side(1024);
  EXPECT_GE(entangled_fidelity(apply_schedule(ReducedState::uniform(size), approx_schedule(size, FinishingRule::None), size).state), 0.999);
}

TEST(ApproxSearch, DegenerateN4) {
  const auto size = GraphSize::from_side(4);
  const auto s = approx_schedule(size);
  const auto run = apply_schedule(ReducedState::uniform(size), s, size);
  EXPECT_NEAR(run.state.norm(), 1.0, 1e-12);
  EXPECT_EQ(run.report.oracle_queries, 2 * s.p + 1);
  const auto before = apply_schedule(ReducedState::uniform(size), approx_schedule(size, FinishingRule::None), size);
  EXPECT_NEAR(entangled_fidelity(before.state), 1.0, 1e-9);
  EXPECT_NEAR(run.report.final_success_probability, 0.5, 1e-9);
}

TEST(OddSearch, ApproximateReachesNMinusOneOverN) {
  const std::vector<std::pair<std::size_t, double>> frozen = {{9, 0.85218}, {101, 0.98954}, {1025, 0.9989469837769877}};
  for (const auto& [n, f] : frozen) {
    const auto size = GraphSize::from_side(n);
    const auto run = apply_schedule(ReducedState::uniform(size), odd_schedule(size, false), size);
    EXPECT_NEAR(run.report.final_success_probability, f, n < 1000 ? 1e-5 : 1e-9) << n;
    EXPECT_EQ(run.report.oracle_queries, 2 * odd_params(size, 0).grover_iterations);
  }
  const double ideal = 1024.0 / 1025.0;
  EXPECT_NEAR(0.9989469837769877, ideal, 1e-3);
}

TEST(OddSearch, DeterministicIsExact) {
  for (std::size_t n = 3; n <= 63; n += 2) {
    const auto size = GraphSize::from_side(n);
    const std::size_t pm = odd_p_min(size);
    for (std::size_t p = pm; p <= pm + 5; ++p) {
      const auto s = odd_schedule(size, true, p);
      EXPECT_GE(final_reduced(s, size), 1 - 1e-9) << n << " " << p;
      EXPECT_GE(final_full(s, size, n / 2), 1 - 1e-8) << n << " " << p;
    }
  }
  EXPECT_THROW(odd_schedule(GraphSize::from_side(9), true, 0), ThetaNotReal);
}

TEST(OddSearch, IterateReachesXiExactly) {
  for (std::size_t n = 9; n <= 63; n += 2) {
    const auto size = GraphSize::from_side(n);
    const auto o = odd_params(size, odd_p_min(size) + 1);
    const Mat4 u = in_dual(iterate_matrix(IterateKind::Odd, size, o.theta_odd), size);
    Vec4 x = Vec4::Zero();
    x(0) = 1.0;
    for (std::size_t j = 0; j < o.p; ++j) x = u * x;
    EXPECT_NEAR(std::norm(xi_state(size).dot(x)), 1.0, 1e-10) << n;
  }
}

}  // namespace
}  // namespace ciin
