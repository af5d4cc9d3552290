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

// Alternating phase-walk search schedules on CIINs: the approximate
// algorithm, its derandomized version, the coherent finishing maps, and the
// odd-n route through span{b1*, xi}.
//
// Every builder returns steps in chronological order. An operator written
// as U = W(t2) O(pi) W(t1) O(pi) therefore appears as
// [Oracle(pi), Walk(t1), Oracle(pi), Walk(t2)].

#include <array>
#include <cstddef>
#include <vector>

#include "ciin/graph.hpp"
#include "ciin/schedule.hpp"
#include "ciin/types.hpp"

namespace ciin {

/// Round half up.
std::size_t nint(double x);

struct ApproxParams {
  /// k in t1 = 2 pi k / n, k = nint(n/4).
  std::size_t k_transfer;
  double t1;
  double t2;
  double t3;
  double lambda_plus;
  std::size_t p;
};

/// Throws InvalidSize for n < 3.
ApproxParams approx_params(GraphSize size);

struct DeterministicParams {
  std::size_t p;
  std::size_t p_min;
  double theta;
  double gamma;
  double t3;
};

/// Smallest p for which the derandomized phase angle is real.
std::size_t deterministic_p_min(GraphSize size);
/// Throws UnsupportedSize unless n mod 4 = 0, ThetaNotReal for p < p_min.
DeterministicParams deterministic_params(GraphSize size, std::size_t p);

/// Two-query map between |w> and (|w> + |w~>)/sqrt(2).
struct MappingParams {
  std::size_t j;
  std::size_t k;
  double phi;
  /// Relative phase of |w~> after [W(2 pi k/n), O(phi), W(2 pi j/n)] on |w>.
  double gamma_map;
};

/// Throws NoValidPair for n < 8 or if either radicand is negative.
MappingParams mapping_params(GraphSize size);

struct OddPathParams {
  std::size_t p;
  std::size_t p_min;
  double theta_odd;
  double phi_odd;
  double gamma_odd;
  double xi_unwind_time;
  /// Applications of U_o^2 used by the approximate odd route.
  std::size_t grover_iterations;
};

std::size_t odd_p_min(GraphSize size);
/// Throws UnsupportedSize for even n, ThetaNotReal for p < odd_p_min.
/// p = 0 fills the p-independent fields and leaves theta_odd at pi.
OddPathParams odd_params(GraphSize size, std::size_t p);

// Schedule fragments.
std::vector<ScheduleStep> approx_iterate(const ApproxParams& params);
/// U(theta) = W(pi/n) O(theta) W(pi/2) O(theta).
std::vector<ScheduleStep> deterministic_half_iterate(GraphSize size, double theta);
/// U(-theta) U(theta).
std::vector<ScheduleStep> deterministic_iterate(GraphSize size, double theta);
/// U_o = W(pi/2) O(pi).
std::vector<ScheduleStep> odd_simple_iterate();
/// U_o(theta) = (W(pi/2) O(-theta))^2 (W(pi/2) O(theta))^2.
std::vector<ScheduleStep> odd_iterate(double theta);
/// |w> -> |+_w>: [W(2 pi k/n), O(phi), W(2 pi j/n), O(-gamma_map)].
std::vector<ScheduleStep> marked_to_entangled(GraphSize size);
/// Reversal of marked_to_entangled with all parameters negated.
std::vector<ScheduleStep> entangled_to_marked(GraphSize size);
/// |xi> -> |w>: W(-pi n/4), then [O(-gamma_odd), W(-pi), O(-phi_odd), W(-pi)].
std::vector<ScheduleStep> xi_to_marked(GraphSize size);

/// p iterates, W(t3), then the finishing map. Coherent appends
/// [O(pi/2), W(2 pi nint(n/8)/n)]; MeasureAndCheck and None append nothing.
Schedule approx_schedule(GraphSize size, FinishingRule finishing = FinishingRule::Coherent);

/// p copies of U(-theta)U(theta), W(t3), then entangled_to_marked when
/// finishing is Coherent.
Schedule deterministic_schedule(GraphSize size, std::size_t p,
                                FinishingRule finishing = FinishingRule::Coherent);

/// Odd n only. Approximate: `p` applications of U_o^2 (0 picks the
/// default count) followed by W(-pi n/4). Deterministic: p copies of
/// U_o(theta_odd) followed by xi_to_marked.
Schedule odd_schedule(GraphSize size, bool deterministic, std::size_t p = 0);

enum class IterateKind { Approximate, Deterministic, Odd };

/// Closed-form rotation of an iterate inside its 2-dimensional subspace.
/// Vectors are in dual-basis coordinates. plane[0] is b1*; plane[1] is b4*
/// (approximate, deterministic) or xi (odd). eigenstates[0] carries the
/// eigenphase +lambda_plus relative to eigenstates[1].
struct IterateSpectrum {
  double lambda_plus;
  double lambda_minus;
  std::array<Vec4, 2> eigenstates;
  std::array<Vec4, 2> plane;
};

/// theta is ignored for the approximate kind.
IterateSpectrum iterate_spectrum(IterateKind kind, GraphSize size, double theta);

/// Walk-basis matrix of the iterate: U, U(-theta)U(theta), or U_o(theta).
Mat4 iterate_matrix(IterateKind kind, GraphSize size, double theta);

/// xi = ((1 + i^n)/2)(b3* + i^n b4*) in dual coordinates (n odd).
Vec4 xi_state(GraphSize size);

}  // namespace ciin
