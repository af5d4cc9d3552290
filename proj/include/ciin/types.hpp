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

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace ciin {

using Complex = std::complex<double>;

/// Coordinates in one of the 4-dimensional bases (walk or dual).
using Vec4 = Eigen::Matrix<Complex, 4, 1>;
using Mat4 = Eigen::Matrix<Complex, 4, 4>;
using RealMat4 = Eigen::Matrix4d;

/// Vertex-indexed amplitudes of the full N-dimensional space.
using Amplitudes = std::vector<Complex>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Execution policy for the full-space kernels.
enum class Exec { Serial, Parallel };

}  // namespace ciin
