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

#include <array>
#include <cstddef>
#include <span>

#include <nlohmann/json.hpp>

#include "ciin/types.hpp"

namespace ciin {

/// Side size n and vertex count N = 2n of a complete identity
/// interdependent network (two copies of K_n joined by a perfect matching).
class GraphSize {
 public:
  /// Throws InvalidSize for n < 2.
  static GraphSize from_side(std::size_t n);
  /// Throws InvalidSize for odd N or N < 4.
  static GraphSize from_vertices(std::size_t vertex_count);

  std::size_t n() const { return n_; }
  std::size_t vertex_count() const { return 2 * n_; }

  bool is_mult4() const { return n_ % 4 == 0; }
  bool is_odd() const { return n_ % 2 == 1; }
  bool is_pow2() const { return (n_ & (n_ - 1)) == 0; }
  /// log2(n); only meaningful when is_pow2().
  unsigned log2_side() const;

  friend bool operator==(const GraphSize&, const GraphSize&) = default;

 private:
  explicit GraphSize(std::size_t n) : n_(n) {}
  std::size_t n_;
};

/// Adjacency [[K_n, I], [I, K_n]]. Entries are computed from the block
/// structure; `apply` is matrix-free so large N never needs N^2 storage.
class FullAdjacency {
 public:
  explicit FullAdjacency(GraphSize size) : size_(size) {}

  const GraphSize& size() const { return size_; }
  double entry(std::size_t row, std::size_t col) const;

  /// Dense N x N copy. Intended for small N.
  Eigen::MatrixXd to_dense() const;

  /// out = A x in O(N).
  Amplitudes apply(std::span<const Complex> x) const;

 private:
  GraphSize size_;
};

FullAdjacency build_full_adjacency(GraphSize size);

/// Vertex groups relative to a marked vertex, in walk-basis order.
enum class VertexGroup { Marked = 0, Opposite = 1, SameSide = 2, FarSide = 3 };

/// Orthonormal basis {b1 = |w>, b2 = |w~>, b3, b4} of the search subspace,
/// where b3 / b4 are the uniform superpositions over the remaining vertices
/// on the marked / opposite side.
class WalkBasis {
 public:
  WalkBasis(GraphSize size, std::size_t marked);

  const GraphSize& size() const { return size_; }
  std::size_t marked() const { return marked_; }
  std::size_t opposite() const { return opposite_; }

  VertexGroup group_of(std::size_t vertex) const;

  /// Materialized basis vector k (0-based), length N.
  Amplitudes vector(std::size_t k) const;

  /// <b_k|x> for k = 0..3.
  Vec4 project(std::span<const Complex> x) const;
  /// sum_k c_k |b_k>.
  Amplitudes lift(const Vec4& coords) const;

  /// Total probability of x on each of the four vertex groups.
  std::array<double, 4> group_probabilities(std::span<const Complex> x) const;

 private:
  GraphSize size_;
  std::size_t marked_;
  std::size_t opposite_;
};

WalkBasis build_walk_basis(GraphSize size, std::size_t marked);

/// Closed-form adjacency restricted to the walk basis.
RealMat4 reduced_adjacency(GraphSize size);

/// <b_i|M|b_j>. M must be N x N.
Mat4 reduce_operator(const Eigen::MatrixXcd& op, const WalkBasis& basis);

/// Eigenvectors of the reduced adjacency, in walk coordinates. Column k holds
/// b_{k+1}^*, with eigenvalue (n, n-2, -2, 0)[k]. The ordering is fixed.
struct DualBasis {
  RealMat4 vectors;
  std::array<double, 4> eigenvalues;

  Vec4 to_dual(const Vec4& walk_coords) const { return vectors.transpose() * walk_coords; }
  Vec4 to_walk(const Vec4& dual_coords) const { return vectors * dual_coords; }
};

DualBasis dual_basis(GraphSize size);

/// Walk coordinates of frequently used states.
Vec4 uniform_state(GraphSize size);
Vec4 marked_state();
/// (|w> + |w~>)/sqrt(2).
Vec4 entangled_target();

/// Row-major JSON form {"rows", "cols", "data": [[...], ...]}.
nlohmann::json matrix_to_json(const Eigen::MatrixXd& m);
Eigen::MatrixXd matrix_from_json(const nlohmann::json& j);

}  // namespace ciin
