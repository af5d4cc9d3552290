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

// Continuous-time search under H = -gamma A - |w><w|, restricted to the walk
// basis and evolved by exact diagonalization of the 4x4 Hamiltonian.

#include "ciin/dynamics.hpp"
#include "ciin/graph.hpp"

namespace ciin {

struct CGConfig {
  GraphSize size;
  double gamma;
  double total_time;
  /// Output sampling interval.
  double dt;

  /// Throws InvalidSize unless gamma > 0, total_time >= 0, dt > 0.
  void validate() const;
};

/// Leading-order perturbative predictions at the critical hopping rate.
struct CGPrediction {
  double gamma_star;
  double delta_e;
  double peak_time;
  double predicted_peak_probability;
};

RealMat4 cg_hamiltonian(GraphSize size, double gamma);

/// exp(-i H t) |s> for a fixed (size, gamma); diagonalizes H once.
class CGPropagator {
 public:
  CGPropagator(GraphSize size, double gamma);

  ReducedState state_at(double t) const;
  const RealMat4& hamiltonian() const { return h_; }
  const Eigen::Vector4d& energies() const { return energies_; }
  const RealMat4& eigenvectors() const { return vectors_; }

 private:
  RealMat4 h_;
  Eigen::Vector4d energies_;
  RealMat4 vectors_;
  Eigen::Vector4d initial_;  // |s> in the eigenbasis
};

/// Trajectory sampled at t = 0, dt, 2 dt, ... and at total_time. Each sample
/// holds walk-group probabilities; walk_time_so_far is t and
/// queries_so_far stays 0.
RunReport cg_evolve(const CGConfig& config);

/// Throws InvalidSize for n < 4.
CGPrediction cg_prediction(GraphSize size);

struct CGPeak {
  double probability;
  double time;
};

/// Largest sampled marked-vertex probability and the time it occurs.
CGPeak cg_peak(const RunReport& report);

/// |E_a - E_b| for the two eigenstates of H with the largest weight on |w>.
double cg_rotation_gap(GraphSize size, double gamma);

}  // namespace ciin
