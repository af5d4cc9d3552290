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

#include "ciin/phase_walk.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ciin/dynamics.hpp"
#include "ciin/error.hpp"

namespace ciin {
namespace {

constexpr double kSlack = 1e-12;

double side(GraphSize size) { return static_cast<double>(size.n()); }

// 2 sqrt(n-1) / n: the sine of the per-iterate rotation at full phase.
double coupling(GraphSize size) {
  const double n = side(size);
  return 2.0 * std::sqrt(n - 1.0) / n;
}

std::size_t ceil_with_slack(double x) {
  return static_cast<std::size_t>(std::max(1.0, std::ceil(x - kSlack)));
}

// asin for arguments that may exceed 1 by rounding only.
double checked_asin(double arg, const char* what) {
  if (arg > 1.0 + kSlack) throw ThetaNotReal(std::string(what) + ": phase angle is not real-valued");
  return std::asin(std::min(arg, 1.0));
}

Complex i_pow(std::size_t n) {
  switch (n % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

Vec4 unit(int k) {
  Vec4 e = Vec4::Zero();
  e(k) = 1.0;
  return e;
}

// atan((n-2)/n tan(x/2)) on the branch continuous in x ∈ [0, pi].
double tan_half_phase(GraphSize size, double x) {
  const double n = side(size);
  return std::atan2((n - 2.0) / n * std::sin(0.5 * x), std::cos(0.5 * x));
}

}  // namespace

std::size_t nint(double x) { return static_cast<std::size_t>(std::floor(x + 0.5)); }

ApproxParams approx_params(GraphSize size) {
  if (size.n() < 3) throw InvalidSize("approximate search needs n >= 3, got n = " + std::to_string(size.n()));
  const double n = side(size);
  ApproxParams a{};
  a.k_transfer = nint(n / 4.0);
  a.t1 = 2.0 * kPi * static_cast<double>(a.k_transfer) / n;
  // tan(t1) is singular when t1 = pi/2
  a.t2 = size.is_mult4() ? kPi / n : -(2.0 / n) * std::atan((n - 2.0) / n * std::tan(a.t1));
  a.t3 = kPi / (2.0 * n) - a.t2 / 2.0;
  a.lambda_plus = std::asin(coupling(size) * std::sin(a.t1));
  a.p = std::max<std::size_t>(1, nint(std::acos(1.0 / std::sqrt(n)) / a.lambda_plus));
  return a;
}

std::size_t deterministic_p_min(GraphSize size) {
  const double n = side(size);
  return ceil_with_slack(std::acos(1.0 / std::sqrt(n)) / (2.0 * std::asin(std::min(1.0, coupling(size)))));
}

DeterministicParams deterministic_params(GraphSize size, std::size_t p) {
  if (!size.is_mult4()) {
    throw UnsupportedSize("deterministic search requires n mod 4 = 0, got n = " + std::to_string(size.n()));
  }
  DeterministicParams d{};
  d.p = p;
  d.p_min = deterministic_p_min(size);
  if (p < d.p_min) {
    throw ThetaNotReal("deterministic search at n = " + std::to_string(size.n()) + " needs p >= " +
                       std::to_string(d.p_min) + ", got p = " + std::to_string(p));
  }
  const double n = side(size);
  const double half_step = std::acos(1.0 / std::sqrt(n)) / (2.0 * static_cast<double>(p));
  d.theta = 2.0 * checked_asin(n / (2.0 * std::sqrt(n - 1.0)) * std::sin(half_step), "deterministic search");
  d.gamma = tan_half_phase(size, d.theta);
  d.t3 = kPi / (2.0 * n) - d.gamma / n;
  return d;
}

MappingParams mapping_params(GraphSize size) {
  const std::size_t nn = size.n();
  if (nn < 8) throw NoValidPair("entangled-to-marked map needs n >= 8, got n = " + std::to_string(nn));
  const double n = side(size);
  MappingParams m{};
  m.j = nn / 8;
  m.k = (nn + 7) / 8;
  const double jk_sum = static_cast<double>(m.j + m.k);
  const double jk_diff = static_cast<double>(m.j) - static_cast<double>(m.k);
  const double num = -std::cos(4.0 * kPi * jk_sum / n);
  const double den = std::cos(4.0 * kPi * jk_diff / n);
  const double phi_radicand = num / den;
  if (!(phi_radicand >= -kSlack) || den == 0.0) {
    throw NoValidPair("no real finishing phase for n = " + std::to_string(nn) + " with j = " +
                      std::to_string(m.j) + ", k = " + std::to_string(m.k));
  }
  m.phi = 2.0 * std::atan(std::sqrt(std::max(0.0, phi_radicand)));

  // arccot(sqrt((s/c)^2 - 1)) = atan2(|c|, sqrt(s^2 - c^2)), defined at c = 0
  const double s = std::sin(4.0 * kPi * static_cast<double>(m.j) / n);
  const double c = std::cos(4.0 * kPi * static_cast<double>(m.k) / n);
  const double gamma_radicand = s * s - c * c;
  if (gamma_radicand < -kSlack) {
    throw NoValidPair("no real finishing phase correction for n = " + std::to_string(nn));
  }
  m.gamma_map = std::atan2(std::abs(c), std::sqrt(std::max(0.0, gamma_radicand)));
  return m;
}

std::size_t odd_p_min(GraphSize size) {
  return ceil_with_slack(kPi / (4.0 * std::asin(std::min(1.0, coupling(size)))));
}

OddPathParams odd_params(GraphSize size, std::size_t p) {
  if (!size.is_odd()) {
    throw UnsupportedSize("odd-path search requires odd n, got n = " + std::to_string(size.n()));
  }
  const double n = side(size);
  OddPathParams o{};
  o.p = p;
  o.p_min = odd_p_min(size);
  o.theta_odd = kPi;
  if (p != 0) {
    if (p < o.p_min) {
      throw ThetaNotReal("odd-path search at n = " + std::to_string(size.n()) + " needs p >= " +
                         std::to_string(o.p_min) + ", got p = " + std::to_string(p));
    }
    const double arg = n / (2.0 * std::sqrt(n - 1.0)) * std::sin(kPi / (4.0 * static_cast<double>(p)));
    o.theta_odd = 2.0 * checked_asin(arg, "odd-path search");
  }
  o.phi_odd = 2.0 * checked_asin(std::pow(n, 1.5) / (4.0 * (n - 2.0) * std::sqrt(n - 1.0)), "odd-path finishing map");
  // atan2 keeps the right branch when n^2 - 8n + 8 < 0 (n = 3, 5)
  o.gamma_odd = std::atan2(n * n * std::cos(0.5 * o.phi_odd), (n * n - 8.0 * n + 8.0) * std::sin(0.5 * o.phi_odd));
  o.xi_unwind_time = -kPi * n / 4.0;
  o.grover_iterations = std::max<std::size_t>(1, nint(kPi / (4.0 * std::asin(1.0 / std::sqrt(n)))));
  return o;
}

std::vector<ScheduleStep> approx_iterate(const ApproxParams& a) {
  return {ScheduleStep::oracle(kPi), ScheduleStep::walk(a.t1), ScheduleStep::oracle(kPi), ScheduleStep::walk(a.t2)};
}

std::vector<ScheduleStep> deterministic_half_iterate(GraphSize size, double theta) {
  return {ScheduleStep::oracle(theta), ScheduleStep::walk(kPi / 2.0), ScheduleStep::oracle(theta),
          ScheduleStep::walk(kPi / side(size))};
}

std::vector<ScheduleStep> deterministic_iterate(GraphSize size, double theta) {
  auto steps = deterministic_half_iterate(size, theta);
  const auto back = deterministic_half_iterate(size, -theta);
  steps.insert(steps.end(), back.begin(), back.end());
  return steps;
}

std::vector<ScheduleStep> odd_simple_iterate() { return {ScheduleStep::oracle(kPi), ScheduleStep::walk(kPi / 2.0)}; }

std::vector<ScheduleStep> odd_iterate(double theta) {
  std::vector<ScheduleStep> steps;
  for (double phase : {theta, theta, -theta, -theta}) {
    steps.push_back(ScheduleStep::oracle(phase));
    steps.push_back(ScheduleStep::walk(kPi / 2.0));
  }
  return steps;
}

std::vector<ScheduleStep> marked_to_entangled(GraphSize size) {
  const MappingParams m = mapping_params(size);
  const double n = side(size);
  return {ScheduleStep::walk(2.0 * kPi * static_cast<double>(m.k) / n), ScheduleStep::oracle(m.phi),
          ScheduleStep::walk(2.0 * kPi * static_cast<double>(m.j) / n), ScheduleStep::oracle(-m.gamma_map)};
}

std::vector<ScheduleStep> entangled_to_marked(GraphSize size) {
  auto steps = marked_to_entangled(size);
  std::reverse(steps.begin(), steps.end());
  for (auto& s : steps) s.parameter = -s.parameter;
  return steps;
}

std::vector<ScheduleStep> xi_to_marked(GraphSize size) {
  const OddPathParams o = odd_params(size, 0);
  return {ScheduleStep::walk(o.xi_unwind_time), ScheduleStep::oracle(-o.gamma_odd), ScheduleStep::walk(-kPi),
          ScheduleStep::oracle(-o.phi_odd), ScheduleStep::walk(-kPi)};
}

Schedule approx_schedule(GraphSize size, FinishingRule finishing) {
  const ApproxParams a = approx_params(size);
  Schedule s;
  s.n = size.n();
  s.p = a.p;
  s.variant = "approx";
  s.finishing = finishing;
  s.steps_per_iterate = 4;
  const auto it = approx_iterate(a);
  for (std::size_t r = 0; r < a.p; ++r) s.append(it);
  s.steps.push_back(ScheduleStep::walk(a.t3));
  if (finishing == FinishingRule::Coherent) {
    const double k = static_cast<double>(nint(side(size) / 8.0));
    s.steps.push_back(ScheduleStep::oracle(kPi / 2.0));
    s.steps.push_back(ScheduleStep::walk(2.0 * kPi * k / side(size)));
  }
  return s;
}

Schedule deterministic_schedule(GraphSize size, std::size_t p, FinishingRule finishing) {
  const DeterministicParams d = deterministic_params(size, p);
  Schedule s;
  s.n = size.n();
  s.p = p;
  s.variant = "deterministic";
  s.finishing = finishing;
  s.steps_per_iterate = 8;
  const auto it = deterministic_iterate(size, d.theta);
  for (std::size_t r = 0; r < p; ++r) s.append(it);
  s.steps.push_back(ScheduleStep::walk(d.t3));
  if (finishing == FinishingRule::Coherent) s.append(entangled_to_marked(size));
  return s;
}

Schedule odd_schedule(GraphSize size, bool deterministic, std::size_t p) {
  Schedule s;
  s.n = size.n();
  if (!deterministic) {
    const OddPathParams o = odd_params(size, 0);
    const std::size_t reps = p == 0 ? o.grover_iterations : p;
    s.p = reps;
    s.variant = "odd-approx";
    s.finishing = FinishingRule::None;
    s.steps_per_iterate = 2;
    const auto it = odd_simple_iterate();
    for (std::size_t r = 0; r < 2 * reps; ++r) s.append(it);
    s.steps.push_back(ScheduleStep::walk(o.xi_unwind_time));
    return s;
  }
  const OddPathParams o = odd_params(size, p);
  if (p == 0) throw ThetaNotReal("odd-path deterministic search needs p >= " + std::to_string(o.p_min));
  s.p = p;
  s.variant = "odd";
  s.finishing = FinishingRule::Coherent;
  s.steps_per_iterate = 8;
  const auto it = odd_iterate(o.theta_odd);
  for (std::size_t r = 0; r < p; ++r) s.append(it);
  s.append(xi_to_marked(size));
  return s;
}

Vec4 xi_state(GraphSize size) {
  if (!size.is_odd()) throw UnsupportedSize("xi is defined for odd n only");
  const Complex in = i_pow(size.n());
  return 0.5 * (1.0 + in) * (unit(2) + in * unit(3));
}

IterateSpectrum iterate_spectrum(IterateKind kind, GraphSize size, double theta) {
  const double r = 1.0 / std::sqrt(2.0);
  IterateSpectrum sp{};
  sp.plane[0] = unit(0);
  switch (kind) {
    case IterateKind::Approximate: {
      const ApproxParams a = approx_params(size);
      sp.lambda_plus = a.lambda_plus;
      const Complex ph = std::polar(1.0, -side(size) * a.t2 / 2.0);
      sp.plane[1] = unit(3);
      sp.eigenstates[0] = r * (unit(3) + ph * unit(0));
      sp.eigenstates[1] = r * (unit(3) - ph * unit(0));
      break;
    }
    case IterateKind::Deterministic: {
      sp.lambda_plus = 2.0 * std::asin(coupling(size) * std::sin(theta / 2.0));
      const Complex ph = std::polar(1.0, -tan_half_phase(size, theta));
      sp.plane[1] = unit(3);
      sp.eigenstates[0] = r * (unit(3) + ph * unit(0));
      sp.eigenstates[1] = r * (unit(3) - ph * unit(0));
      break;
    }
    case IterateKind::Odd: {
      sp.lambda_plus = 2.0 * std::asin(coupling(size) * std::sin(theta / 2.0));
      const Complex ph = std::polar(1.0, -tan_half_phase(size, theta));
      const Vec4 xi = xi_state(size);
      sp.plane[1] = xi;
      sp.eigenstates[0] = r * (-ph * unit(0) + xi);
      sp.eigenstates[1] = r * (ph * unit(0) + xi);
      break;
    }
  }
  sp.lambda_minus = -sp.lambda_plus;
  return sp;
}

Mat4 iterate_matrix(IterateKind kind, GraphSize size, double theta) {
  switch (kind) {
    case IterateKind::Approximate: return schedule_matrix(approx_iterate(approx_params(size)), size);
    case IterateKind::Deterministic: return schedule_matrix(deterministic_iterate(size, theta), size);
    case IterateKind::Odd: return schedule_matrix(odd_iterate(theta), size);
  }
  return Mat4::Identity();
}

}  // namespace ciin
