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

#include "ciin/graph.hpp"

#include <cmath>
#include <string>

#include "ciin/error.hpp"

namespace ciin {

GraphSize GraphSize::from_side(std::size_t n) {
  if (n < 2) {
    throw InvalidSize("side size n must be >= 2, got " + std::to_string(n));
  }
  return GraphSize(n);
}

GraphSize GraphSize::from_vertices(std::size_t vertex_count) {
  if (vertex_count % 2 != 0) {
    throw InvalidSize("vertex count N must be even, got " + std::to_string(vertex_count));
  }
  return from_side(vertex_count / 2);
}

unsigned GraphSize::log2_side() const {
  unsigned m = 0;
  while ((std::size_t{1} << m) < n_) ++m;
  return m;
}

double FullAdjacency::entry(std::size_t row, std::size_t col) const {
  const std::size_t n = size_.n();
  if (row == col) return 0.0;
  const bool same_side = (row < n) == (col < n);
  if (same_side) return 1.0;
  return (row % n == col % n) ? 1.0 : 0.0;
}

Eigen::MatrixXd FullAdjacency::to_dense() const {
  const auto dim = static_cast<Eigen::Index>(size_.vertex_count());
  Eigen::MatrixXd a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      a(i, j) = entry(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
  }
  return a;
}

Amplitudes FullAdjacency::apply(std::span<const Complex> x) const {
  const std::size_t n = size_.n();
  if (x.size() != 2 * n) {
    throw DimensionMismatch("adjacency apply: expected " + std::to_string(2 * n) +
                            " amplitudes, got " + std::to_string(x.size()));
  }
  Complex side_sum[2] = {0.0, 0.0};
  for (std::size_t v = 0; v < 2 * n; ++v) side_sum[v / n] += x[v];

  // (A x)_v = (sum over own side) - x_v + x_opposite
  Amplitudes out(2 * n);
  for (std::size_t v = 0; v < 2 * n; ++v) {
    const std::size_t opp = (v + n) % (2 * n);
    out[v] = side_sum[v / n] - x[v] + x[opp];
  }
  return out;
}

FullAdjacency build_full_adjacency(GraphSize size) { return FullAdjacency(size); }

WalkBasis::WalkBasis(GraphSize size, std::size_t marked)
    : size_(size), marked_(marked), opposite_((marked + size.n()) % size.vertex_count()) {
  if (marked >= size.vertex_count()) {
    throw IndexError("marked vertex " + std::to_string(marked) + " out of range [0, " +
                     std::to_string(size.vertex_count()) + ")");
  }
}

VertexGroup WalkBasis::group_of(std::size_t vertex) const {
  if (vertex == marked_) return VertexGroup::Marked;
  if (vertex == opposite_) return VertexGroup::Opposite;
  const std::size_t n = size_.n();
  return (vertex / n == marked_ / n) ? VertexGroup::SameSide : VertexGroup::FarSide;
}

Amplitudes WalkBasis::vector(std::size_t k) const {
  if (k >= 4) throw IndexError("walk basis index must be in [0, 4)");
  const double w = 1.0 / std::sqrt(static_cast<double>(size_.n() - 1));
  Amplitudes v(size_.vertex_count(), 0.0);
  for (std::size_t x = 0; x < v.size(); ++x) {
    const auto g = static_cast<std::size_t>(group_of(x));
    if (g != k) continue;
    v[x] = (g < 2) ? 1.0 : w;
  }
  return v;
}

Vec4 WalkBasis::project(std::span<const Complex> x) const {
  if (x.size() != size_.vertex_count()) {
    throw DimensionMismatch("walk basis project: dimension mismatch");
  }
  Vec4 c = Vec4::Zero();
  for (std::size_t v = 0; v < x.size(); ++v) c(static_cast<int>(group_of(v))) += x[v];
  const double w = 1.0 / std::sqrt(static_cast<double>(size_.n() - 1));
  c(2) *= w;
  c(3) *= w;
  return c;
}

Amplitudes WalkBasis::lift(const Vec4& coords) const {
  const double w = 1.0 / std::sqrt(static_cast<double>(size_.n() - 1));
  const Complex per_vertex[4] = {coords(0), coords(1), coords(2) * w, coords(3) * w};
  Amplitudes out(size_.vertex_count());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = per_vertex[static_cast<int>(group_of(v))];
  return out;
}

std::array<double, 4> WalkBasis::group_probabilities(std::span<const Complex> x) const {
  if (x.size() != size_.vertex_count()) {
    throw DimensionMismatch("group probabilities: dimension mismatch");
  }
  std::array<double, 4> p{};
  for (std::size_t v = 0; v < x.size(); ++v) p[static_cast<std::size_t>(group_of(v))] += std::norm(x[v]);
  return p;
}

WalkBasis build_walk_basis(GraphSize size, std::size_t marked) { return WalkBasis(size, marked); }

RealMat4 reduced_adjacency(GraphSize size) {
  const double n = static_cast<double>(size.n());
  const double r = std::sqrt(n - 1.0);
  RealMat4 a;
  a << 0, 1, r, 0,
       1, 0, 0, r,
       r, 0, n - 2, 1,
       0, r, 1, n - 2;
  return a;
}

Mat4 reduce_operator(const Eigen::MatrixXcd& op, const WalkBasis& basis) {
  const auto dim = static_cast<Eigen::Index>(basis.size().vertex_count());
  if (op.rows() != dim || op.cols() != dim) {
    throw DimensionMismatch("reduce_operator: operator is " + std::to_string(op.rows()) + "x" +
                            std::to_string(op.cols()) + ", basis needs " + std::to_string(dim));
  }
  Eigen::MatrixXcd b(dim, 4);
  for (int k = 0; k < 4; ++k) {
    const Amplitudes v = basis.vector(static_cast<std::size_t>(k));
    for (Eigen::Index x = 0; x < dim; ++x) b(x, k) = v[static_cast<std::size_t>(x)];
  }
  return b.adjoint() * op * b;
}

DualBasis dual_basis(GraphSize size) {
  const double n = static_cast<double>(size.n());
  const double r = std::sqrt(n - 1.0);
  const double c = 1.0 / std::sqrt(2.0 * n);
  DualBasis d;
  // columns b1*..b4* in walk coordinates
  d.vectors.col(0) << 1, 1, r, r;
  d.vectors.col(1) << -1, 1, -r, r;
  d.vectors.col(2) << r, -r, -1, 1;
  d.vectors.col(3) << -r, -r, 1, 1;
  d.vectors *= c;
  d.eigenvalues = {n, n - 2.0, -2.0, 0.0};
  return d;
}

Vec4 uniform_state(GraphSize size) {
  const double n = static_cast<double>(size.n());
  const double r = std::sqrt(n - 1.0);
  Vec4 s;
  s << 1.0, 1.0, r, r;
  return s / std::sqrt(2.0 * n);
}

Vec4 marked_state() {
  Vec4 w = Vec4::Zero();
  w(0) = 1.0;
  return w;
}

Vec4 entangled_target() {
  Vec4 e = Vec4::Zero();
  e(0) = e(1) = 1.0 / std::sqrt(2.0);
  return e;
}

nlohmann::json matrix_to_json(const Eigen::MatrixXd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(rows)}};
}

Eigen::MatrixXd matrix_from_json(const nlohmann::json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto& data = j.at("data");
  if (static_cast<Eigen::Index>(data.size()) != rows) {
    throw ParseError("matrix json: row count does not match data");
  }
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = data.at(static_cast<std::size_t>(i));
    if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw ParseError("matrix json: ragged row " + std::to_string(i));
    }
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = row.at(static_cast<std::size_t>(k)).get<double>();
  }
  return m;
}

}  // namespace ciin
