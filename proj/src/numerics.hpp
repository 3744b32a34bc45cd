// Copyright 2026 The locc-tools Authors
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

// Internal numerical helpers shared by the library sources.

#include <cstddef>

#include <Eigen/Dense>

#include "locc/linalg.hpp"

namespace locc::detail {

/// Column-major vectorization; Tr(A^* B) equals the Euclidean inner product.
inline Eigen::VectorXcd vec(const ComplexMatrix& m) {
  return Eigen::Map<const Eigen::VectorXcd>(m.data(), m.size());
}

inline ComplexMatrix unvec(const Eigen::VectorXcd& v, Eigen::Index d) {
  return Eigen::Map<const ComplexMatrix>(v.data(), d, d);
}

/// Orthonormal basis of the null space of k (columns). Singular values at or
/// below rel_tol * max(s_max, scale) count as zero; pass the expected size of
/// k's entries as scale so that a numerically zero k has a full null space.
Eigen::MatrixXcd null_space(const Eigen::MatrixXcd& k, double scale = 0.0,
                            double rel_tol = kRankTol);

/// Orthonormal basis of the column space of m.
Eigen::MatrixXcd orthonormal_range(const Eigen::MatrixXcd& m,
                                   double rel_tol = kRankTol);

/// Incrementally grown orthonormal basis of a subspace of C^n. Vectors of
/// norm at most rel_tol * scale are treated as zero.
class SpanBuilder {
 public:
  explicit SpanBuilder(Eigen::Index ambient, double scale = 0.0, double rel_tol = kRankTol);

  /// Adds v if it is not in the current span; returns whether it was added.
  bool add(const Eigen::VectorXcd& v);
  /// Adds every column of vs that is not already in the span.
  void add_columns(const Eigen::MatrixXcd& vs);
  bool contains(const Eigen::VectorXcd& v) const;
  Eigen::VectorXcd residual(const Eigen::VectorXcd& v) const;

  Eigen::Index dim() const noexcept { return count_; }
  Eigen::Index ambient() const noexcept { return ambient_; }
  bool full() const noexcept { return count_ == ambient_; }
  auto basis() const { return q_.leftCols(count_); }
  Eigen::VectorXcd column(Eigen::Index i) const { return q_.col(i); }

 private:
  Eigen::Index ambient_;
  double rel_tol_;
  double floor_;
  Eigen::MatrixXcd q_;
  Eigen::Index count_ = 0;
};

}  // namespace locc::detail
