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

// Full-space kernels. Every kernel has a straightforward serial reference
// in `serial` and an OpenMP version in `omp`; tests hold them equal and the
// benchmark target compares their speed. Results of the `omp` kernels do not
// depend on the thread count.

#include <cstddef>
#include <cstdint>
#include <span>

#include "ciin/types.hpp"

namespace ciin::kernels {

/// Below this many amplitudes the OpenMP kernels run on one thread.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

namespace serial {

/// In-place exp(-i t A) on a CIIN with side size n (amps.size() == 2n),
/// through the projectors onto the n, n-2, -2 and 0 eigenspaces.
void walk(std::span<Complex> amps, std::size_t n, double t);

void hadamard(std::span<Complex> amps, unsigned bit);
/// diag(on_zero, on_one) on `bit`.
void diagonal(std::span<Complex> amps, unsigned bit, Complex on_zero, Complex on_one);
void pauli_x(std::span<Complex> amps, unsigned bit);
/// Multiplies amps[i] by `factor` for every i with (i & mask) == value.
void masked_phase(std::span<Complex> amps, std::uint64_t mask, std::uint64_t value, Complex factor);

}  // namespace serial

namespace omp {

void walk(std::span<Complex> amps, std::size_t n, double t);
void hadamard(std::span<Complex> amps, unsigned bit);
void diagonal(std::span<Complex> amps, unsigned bit, Complex on_zero, Complex on_one);
void pauli_x(std::span<Complex> amps, unsigned bit);
void masked_phase(std::span<Complex> amps, std::uint64_t mask, std::uint64_t value, Complex factor);

}  // namespace omp

/// Dispatch on an execution policy.
void walk(Exec exec, std::span<Complex> amps, std::size_t n, double t);
void hadamard(Exec exec, std::span<Complex> amps, unsigned bit);
void diagonal(Exec exec, std::span<Complex> amps, unsigned bit, Complex on_zero, Complex on_one);
void pauli_x(Exec exec, std::span<Complex> amps, unsigned bit);
void masked_phase(Exec exec, std::span<Complex> amps, std::uint64_t mask, std::uint64_t value,
                  Complex factor);

}  // namespace ciin::kernels
