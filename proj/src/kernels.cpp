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

#include "ciin/kernels.hpp"

#include <cmath>
#include <vector>

#include <algorithm>

namespace ciin::kernels {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440084436210484903928;

// Spectral factors of exp(-i t A) on the four eigenspaces.
struct WalkPhases {
  Complex uniform_sym;     // eigenvalue n
  Complex uniform_anti;    // eigenvalue n - 2
  Complex nonuniform_anti; // eigenvalue -2; nonuniform symmetric (0) is 1
};

WalkPhases walk_phases(std::size_t n, double t) {
  const double dn = static_cast<double>(n);
  return {std::polar(1.0, -t * dn), std::polar(1.0, -t * (dn - 2.0)), std::polar(1.0, 2.0 * t)};
}

inline void walk_position(Complex& x0, Complex& x1, Complex sym_mean, Complex anti_mean,
                          const WalkPhases& ph) {
  const Complex sym = 0.5 * (x0 + x1);
  const Complex anti = 0.5 * (x0 - x1);
  const Complex new_sym = ph.uniform_sym * sym_mean + (sym - sym_mean);
  const Complex new_anti = ph.uniform_anti * anti_mean + ph.nonuniform_anti * (anti - anti_mean);
  x0 = new_sym + new_anti;
  x1 = new_sym - new_anti;
}

inline std::size_t insert_zero_bit(std::size_t k, unsigned bit) {
  const std::size_t low = k & ((std::size_t{1} << bit) - 1);
  return ((k >> bit) << (bit + 1)) | low;
}

}  // namespace

namespace serial {

void walk(std::span<Complex> amps, std::size_t n, double t) {
  Complex side0 = 0.0;
  Complex side1 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    side0 += amps[i];
    side1 += amps[i + n];
  }
  const double dn = static_cast<double>(n);
  const Complex sym_mean = 0.5 * (side0 + side1) / dn;
  const Complex anti_mean = 0.5 * (side0 - side1) / dn;
  const WalkPhases ph = walk_phases(n, t);
  for (std::size_t i = 0; i < n; ++i) walk_position(amps[i], amps[i + n], sym_mean, anti_mean, ph);
}

void hadamard(std::span<Complex> amps, unsigned bit) {
  const std::size_t stride = std::size_t{1} << bit;
  for (std::size_t k = 0; k < amps.size() / 2; ++k) {
    const std::size_t i0 = insert_zero_bit(k, bit);
    const Complex a = amps[i0];
    const Complex b = amps[i0 + stride];
    amps[i0] = kInvSqrt2 * (a + b);
    amps[i0 + stride] = kInvSqrt2 * (a - b);
  }
}

void diagonal(std::span<Complex> amps, unsigned bit, Complex on_zero, Complex on_one) {
  const std::size_t m = std::size_t{1} << bit;
  for (std::size_t i = 0; i < amps.size(); ++i) amps[i] *= (i & m) ? on_one : on_zero;
}

void pauli_x(std::span<Complex> amps, unsigned bit) {
  const std::size_t stride = std::size_t{1} << bit;
  for (std::size_t k = 0; k < amps.size() / 2; ++k) {
    const std::size_t i0 = insert_zero_bit(k, bit);
    std::swap(amps[i0], amps[i0 + stride]);
  }
}

void masked_phase(std::span<Complex> amps, std::uint64_t mask, std::uint64_t value, Complex factor) {
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & mask) == value) amps[i] *= factor;
  }
}

}  // namespace serial

namespace omp {

void walk(std::span<Complex> amps, std::size_t n, double t) {
  // Fixed-size blocks combined in block order, so the sums (and therefore
  // the output bits) are the same for any number of threads.
  constexpr std::size_t kBlock = 4096;
  const std::size_t blocks = (n + kBlock - 1) / kBlock;
  std::vector<double> partial(4 * blocks, 0.0);
  const bool par = 2 * n >= kParallelThreshold;

  const auto nb = static_cast<std::int64_t>(blocks);
#pragma omp parallel for schedule(static) if (par)
  for (std::int64_t b = 0; b < nb; ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
    const std::size_t hi = std::min(n, lo + kBlock);
    Complex s0 = 0.0;
    Complex s1 = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
      s0 += amps[i];
      s1 += amps[i + n];
    }
    double* p = &partial[4 * static_cast<std::size_t>(b)];
    p[0] = s0.real();
    p[1] = s0.imag();
    p[2] = s1.real();
    p[3] = s1.imag();
  }
  Complex side0 = 0.0;
  Complex side1 = 0.0;
  for (std::size_t b = 0; b < blocks; ++b) {
    side0 += Complex(partial[4 * b], partial[4 * b + 1]);
    side1 += Complex(partial[4 * b + 2], partial[4 * b + 3]);
  }
  const double dn = static_cast<double>(n);
  const Complex sym_mean = 0.5 * (side0 + side1) / dn;
  const Complex anti_mean = 0.5 * (side0 - side1) / dn;
  const WalkPhases ph = walk_phases(n, t);

  const auto ni = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) if (par)
  for (std::int64_t i = 0; i < ni; ++i) {
    const auto u = static_cast<std::size_t>(i);
    walk_position(amps[u], amps[u + n], sym_mean, anti_mean, ph);
  }
}

void hadamard(std::span<Complex> amps, unsigned bit) {
  const std::size_t stride = std::size_t{1} << bit;
  const auto half = static_cast<std::int64_t>(amps.size() / 2);
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
  for (std::int64_t k = 0; k < half; ++k) {
    const std::size_t i0 = insert_zero_bit(static_cast<std::size_t>(k), bit);
    const Complex a = amps[i0];
    const Complex b = amps[i0 + stride];
    amps[i0] = kInvSqrt2 * (a + b);
    amps[i0 + stride] = kInvSqrt2 * (a - b);
  }
}

void diagonal(std::span<Complex> amps, unsigned bit, Complex on_zero, Complex on_one) {
  const std::size_t m = std::size_t{1} << bit;
  const auto dim = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
  for (std::int64_t i = 0; i < dim; ++i) {
    const auto u = static_cast<std::size_t>(i);
    amps[u] *= (u & m) ? on_one : on_zero;
  }
}

void pauli_x(std::span<Complex> amps, unsigned bit) {
  const std::size_t stride = std::size_t{1} << bit;
  const auto half = static_cast<std::int64_t>(amps.size() / 2);
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
  for (std::int64_t k = 0; k < half; ++k) {
    const std::size_t i0 = insert_zero_bit(static_cast<std::size_t>(k), bit);
    std::swap(amps[i0], amps[i0 + stride]);
  }
}

void masked_phase(std::span<Complex> amps, std::uint64_t mask, std::uint64_t value, Complex factor) {
  const auto dim = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
  for (std::int64_t i = 0; i < dim; ++i) {
    const auto u = static_cast<std::uint64_t>(i);
    if ((u & mask) == value) amps[static_cast<std::size_t>(i)] *= factor;
  }
}

}  // namespace omp

void walk(Exec exec, std::span<Complex> amps, std::size_t n, double t) {
  exec == Exec::Serial ? serial::walk(amps, n, t) : omp::walk(amps, n, t);
}

void hadamard(Exec exec, std::span<Complex> amps, unsigned bit) {
  exec == Exec::Serial ? serial::hadamard(amps, bit) : omp::hadamard(amps, bit);
}

void diagonal(Exec exec, std::span<Complex> amps, unsigned bit, Complex on_zero, Complex on_one) {
  exec == Exec::Serial ? serial::diagonal(amps, bit, on_zero, on_one)
                       : omp::diagonal(amps, bit, on_zero, on_one);
}

void pauli_x(Exec exec, std::span<Complex> amps, unsigned bit) {
  exec == Exec::Serial ? serial::pauli_x(amps, bit) : omp::pauli_x(amps, bit);
}

void masked_phase(Exec exec, std::span<Complex> amps, std::uint64_t mask, std::uint64_t value,
                  Complex factor) {
  exec == Exec::Serial ? serial::masked_phase(amps, mask, value, factor)
                       : omp::masked_phase(amps, mask, value, factor);
}

}  // namespace ciin::kernels
