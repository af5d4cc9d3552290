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

#include "ciin/cg_search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "ciin/error.hpp"

namespace ciin {

void CGConfig::validate() const {
  if (!(gamma > 0.0)) throw InvalidSize("CG config: gamma must be > 0");
  if (!(total_time >= 0.0)) throw InvalidSize("CG config: total_time must be >= 0");
  if (!(dt > 0.0)) throw InvalidSize("CG config: dt must be > 0");
}

RealMat4 cg_hamiltonian(GraphSize size, double gamma) {
  RealMat4 h = -gamma * reduced_adjacency(size);
  h(0, 0) -= 1.0;
  return h;
}

CGPropagator::CGPropagator(GraphSize size, double gamma) : h_(cg_hamiltonian(size, gamma)) {
  Eigen::SelfAdjointEigenSolver<RealMat4> solver(h_);
  energies_ = solver.eigenvalues();
  vectors_ = solver.eigenvectors();
  initial_ = vectors_.transpose() * uniform_state(size).real();
}

ReducedState CGPropagator::state_at(double t) const {
  Vec4 c;
  for (int k = 0; k < 4; ++k) c(k) = initial_(k) * std::polar(1.0, -energies_(k) * t);
  return {vectors_.cast<Complex>() * c};
}

RunReport cg_evolve(const CGConfig& config) {
  config.validate();
  const CGPropagator prop(config.size, config.gamma);
  RunReport r;
  auto sample = [&](std::size_t index, double t) {
    const Vec4 a = prop.state_at(t).amplitudes;
    r.trajectory.push_back({index, {std::norm(a(0)), std::norm(a(1)), std::norm(a(2)), std::norm(a(3))}, 0, t});
  };
  const auto steps = static_cast<std::size_t>(std::floor(config.total_time / config.dt + 1e-9));
  for (std::size_t k = 0; k <= steps; ++k) sample(k, static_cast<double>(k) * config.dt);
  if (r.trajectory.back().walk_time_so_far < config.total_time) sample(steps + 1, config.total_time);
  r.final_success_probability = r.trajectory.back().probabilities[0];
  r.total_walk_time = config.total_time;
  return r;
}

CGPrediction cg_prediction(GraphSize size) {
  if (size.n() < 4) throw InvalidSize("CG prediction needs n >= 4");
  const double n = static_cast<double>(size.n());
  const double delta_e = 2.0 / std::sqrt(n);
  return {1.0 / n, delta_e, kPi / delta_e, 0.5};
}

CGPeak cg_peak(const RunReport& report) {
  CGPeak best{-1.0, 0.0};
  for (const auto& s : report.trajectory) {
    if (s.probabilities[0] > best.probability) best = {s.probabilities[0], s.walk_time_so_far};
  }
  return best;
}

double cg_rotation_gap(GraphSize size, double gamma) {
  const CGPropagator prop(size, gamma);
  std::array<int, 4> idx{};
  std::iota(idx.begin(), idx.end(), 0);
  const auto& v = prop.eigenvectors();
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return v(0, a) * v(0, a) > v(0, b) * v(0, b); });
  return std::abs(prop.energies()(idx[0]) - prop.energies()(idx[1]));
}

}  // namespace ciin
