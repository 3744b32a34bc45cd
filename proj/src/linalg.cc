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

#include "locc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "numerics.hpp"

namespace locc {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonUnitary: return "NonUnitary";
    case ErrorCode::kNonSquare: return "NonSquare";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInvalidPovm: return "InvalidPovm";
    case ErrorCode::kNotCoisometry: return "NotCoisometry";
    case ErrorCode::kNotOrthogonalStates: return "NotOrthogonalStates";
    case ErrorCode::kNotPermutation: return "NotPermutation";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kBadLabel: return "BadLabel";
    case ErrorCode::kNotAnAlgebra: return "NotAnAlgebra";
    case ErrorCode::kSamplingFailed: return "SamplingFailed";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kVertexCountMismatch: return "VertexCountMismatch";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotSpanning: return "NotSpanning";
    case ErrorCode::kBadDimension: return "BadDimension";
    case ErrorCode::kInvalidCertificate: return "InvalidCertificate";
    case ErrorCode::kInvalidProtocol: return "InvalidProtocol";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kNumerical: return "Numerical";
  }
  return "Unknown";
}

Tolerance::Tolerance(double value) : abs(value) {
  if (!(value > 0.0 && value < 1.0)) {
    throw LoccError(ErrorCode::kBadParams,
                    "tolerance must lie in (0, 1), got " + std::to_string(value));
  }
}

PartialIsometry::PartialIsometry(ComplexMatrix w, Tolerance tol) : w_(std::move(w)) {
  const auto d = w_.rows();
  if (d == 0 || w_.cols() < d ||
      (w_ * w_.adjoint() - ComplexMatrix::Identity(d, d)).norm() > tol.abs) {
    throw LoccError(ErrorCode::kNotCoisometry, "W W^* differs from the identity");
  }
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Ket kron_ket(const Ket& u, const Ket& v) {
  Ket out(u.size() * v.size());
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    out.segment(i * v.size(), v.size()) = u(i) * v;
  }
  return out;
}

Complex inner(const Ket& u, const Ket& v) {
  if (u.size() != v.size()) {
    throw LoccError(ErrorCode::kDimensionMismatch, "inner product of kets of different size");
  }
  return u.dot(v);  // conjugate-linear in the first argument
}

ComplexMatrix adjoint(const ComplexMatrix& m) { return m.adjoint(); }

ComplexMatrix outer(const Ket& u, const Ket& v) { return u * v.adjoint(); }

bool is_unitary(const ComplexMatrix& u, Tolerance tol) {
  if (u.rows() != u.cols() || u.rows() == 0) return false;
  const auto d = u.rows();
  return (u.adjoint() * u - ComplexMatrix::Identity(d, d)).norm() <= tol.abs;
}

bool is_hermitian(const ComplexMatrix& m, Tolerance tol) {
  return m.rows() == m.cols() && (m - m.adjoint()).norm() <= tol.abs;
}

bool is_permutation_matrix(const ComplexMatrix& p, Tolerance tol) {
  if (p.rows() != p.cols() || p.rows() == 0) return false;
  const auto d = p.rows();
  std::vector<int> row_ones(d, 0);
  std::vector<int> col_ones(d, 0);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      const Complex x = p(i, j);
      if (std::abs(x - Complex(1.0)) <= tol.abs) {
        ++row_ones[i];
        ++col_ones[j];
      } else if (std::abs(x) > tol.abs) {
        return false;
      }
    }
  }
  return std::all_of(row_ones.begin(), row_ones.end(), [](int c) { return c == 1; }) &&
         std::all_of(col_ones.begin(), col_ones.end(), [](int c) { return c == 1; });
}

double min_hermitian_eigenvalue(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw LoccError(ErrorCode::kNonSquare, "eigenvalues of a non-square matrix");
  }
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

std::size_t numerical_rank(const ComplexMatrix& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) <= 1e-300) return 0;
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > rel_tol * s(0)) ++rank;
  }
  return rank;
}

Ket normalized(const Ket& v) {
  const double n = v.norm();
  if (n == 0.0) throw LoccError(ErrorCode::kZeroVector, "cannot normalize the zero vector");
  return v / n;
}

Ket max_entangled(const ComplexMatrix& u, Tolerance tol) {
  if (!is_unitary(u, tol)) {
    throw LoccError(ErrorCode::kNonUnitary, "max_entangled requires a unitary");
  }
  const auto d = u.rows();
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  Ket out(d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) out(i * d + j) = u(j, i) * scale;
  }
  return out;
}

ComplexMatrix map_to_diagonal(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw LoccError(ErrorCode::kNonSquare, "map_to_diagonal requires a square matrix");
  }
  ComplexMatrix out = ComplexMatrix::Zero(m.rows(), m.cols());
  out.diagonal() = m.diagonal();
  return out;
}

bool validate_povm(const Povm& p) {
  if (p.elements.empty()) return false;
  const auto d = p.elements.front().rows();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& e : p.elements) {
    if (e.rows() != d || e.cols() != d) {
      throw LoccError(ErrorCode::kDimensionMismatch, "POVM elements differ in size");
    }
    if (!is_hermitian(e, p.tol)) return false;
    if (min_hermitian_eigenvalue(e) < -p.tol.abs) return false;
    sum += e;
  }
  return (sum - ComplexMatrix::Identity(d, d)).norm() <= p.tol.abs;
}

namespace {

Eigen::Index common_dimension(std::span<const ComplexMatrix> unitaries) {
  if (unitaries.empty()) {
    throw LoccError(ErrorCode::kDimensionMismatch, "empty operator list");
  }
  const auto d = unitaries.front().rows();
  for (const auto& u : unitaries) {
    if (u.rows() != d || u.cols() != d) {
      throw LoccError(ErrorCode::kDimensionMismatch, "operators must be square of equal size");
    }
  }
  return d;
}

}  // namespace

void require_orthogonal_unitaries(std::span<const ComplexMatrix> unitaries, Tolerance tol) {
  const auto d = common_dimension(unitaries);
  for (std::size_t i = 0; i < unitaries.size(); ++i) {
    for (std::size_t j = i + 1; j < unitaries.size(); ++j) {
      const Complex overlap = (unitaries[j].adjoint() * unitaries[i]).trace() /
                              static_cast<double>(d);
      if (std::abs(overlap) > tol.abs) {
        throw LoccError(ErrorCode::kNotOrthogonalStates,
                        "states " + std::to_string(i) + " and " + std::to_string(j) +
                            " are not orthogonal");
      }
    }
  }
}

bool verify_weighted_states(const WeightedStates& ws,
                             std::span<const ComplexMatrix> unitaries, Tolerance tol) {
  const auto d = common_dimension(unitaries);
  if (ws.states.size() != ws.weights.size() || ws.states.empty()) {
    throw LoccError(ErrorCode::kInvalidPovm, "states and weights must be nonempty and paired");
  }
  ComplexMatrix resolution = ComplexMatrix::Zero(d, d);
  for (std::size_t k = 0; k < ws.states.size(); ++k) {
    if (ws.states[k].size() != d) {
      throw LoccError(ErrorCode::kDimensionMismatch, "state dimension differs from operators");
    }
    if (!(ws.weights[k] > 0.0)) {
      throw LoccError(ErrorCode::kInvalidPovm, "weights must be positive");
    }
    resolution += ws.weights[k] * outer(ws.states[k], ws.states[k]);
  }
  if ((resolution - ComplexMatrix::Identity(d, d)).norm() > tol.abs) {
    throw LoccError(ErrorCode::kInvalidPovm, "weighted states do not resolve the identity");
  }
  require_orthogonal_unitaries(unitaries, tol);

  for (const auto& phi : ws.states) {
    const Ket unit = normalized(phi);
    std::vector<Ket> images;
    images.reserve(unitaries.size());
    for (const auto& u : unitaries) images.push_back(u * unit);
    for (std::size_t i = 0; i < images.size(); ++i) {
      for (std::size_t j = i + 1; j < images.size(); ++j) {
        if (std::abs(images[j].dot(images[i])) > tol.abs) return false;
      }
    }
  }
  return true;
}

bool verify_isometry_condition(const PartialIsometry& w,
                               std::span<const ComplexMatrix> unitaries, Tolerance tol) {
  const auto d = common_dimension(unitaries);
  const ComplexMatrix& wm = w.matrix();
  if (wm.rows() != d) {
    throw LoccError(ErrorCode::kDimensionMismatch, "W has the wrong number of rows");
  }
  require_orthogonal_unitaries(unitaries, tol);
  std::vector<ComplexMatrix> images;
  images.reserve(unitaries.size());
  for (const auto& u : unitaries) images.push_back(u * wm);
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = 0; j < images.size(); ++j) {
      if (i == j) continue;
      // diag(W^* U_j^* U_i W)_k = <U_j w_k, U_i w_k>
      for (Eigen::Index k = 0; k < wm.cols(); ++k) {
        if (std::abs(images[j].col(k).dot(images[i].col(k))) > tol.abs) return false;
      }
    }
  }
  return true;
}

WeightedStates weighted_states_from_isometry(const PartialIsometry& w) {
  WeightedStates ws;
  const ComplexMatrix& wm = w.matrix();
  for (Eigen::Index k = 0; k < wm.cols(); ++k) {
    const double n = wm.col(k).norm();
    if (n <= 1e-15) continue;
    ws.states.push_back(wm.col(k) / n);
    ws.weights.push_back(n * n);
  }
  return ws;
}

Ket random_ket(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Ket v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return normalized(v);
}

ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto d = static_cast<Eigen::Index>(dim);
  ComplexMatrix g(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix column phases so the distribution is Haar.
  for (Eigen::Index j = 0; j < d; ++j) {
    const Complex diag = r(j, j);
    if (std::abs(diag) > 0.0) q.col(j) *= diag / std::abs(diag);
  }
  return q;
}

namespace detail {

Eigen::MatrixXcd null_space(const Eigen::MatrixXcd& k, double scale, double rel_tol) {
  const auto n = k.cols();
  if (n == 0) return Eigen::MatrixXcd(0, 0);
  if (k.rows() == 0) return Eigen::MatrixXcd::Identity(n, n);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(k, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  Eigen::Index rank = 0;
  if (s.size() > 0 && s(0) > 1e-13) {
    const double cut = rel_tol * std::max(s(0), scale);
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      if (s(i) > cut) ++rank;
    }
  }
  return svd.matrixV().rightCols(n - rank);
}

Eigen::MatrixXcd orthonormal_range(const Eigen::MatrixXcd& m, double rel_tol) {
  if (m.cols() == 0 || m.rows() == 0) return Eigen::MatrixXcd(m.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  Eigen::Index rank = 0;
  if (s.size() > 0 && s(0) > 1e-300) {
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      if (s(i) > rel_tol * s(0)) ++rank;
    }
  }
  return svd.matrixU().leftCols(rank);
}

SpanBuilder::SpanBuilder(Eigen::Index ambient, double scale, double rel_tol)
    : ambient_(ambient), rel_tol_(rel_tol), floor_(rel_tol * scale), q_(ambient, std::min<Eigen::Index>(ambient, 16)) {}

Eigen::VectorXcd SpanBuilder::residual(const Eigen::VectorXcd& v) const {
  Eigen::VectorXcd r = v;
  if (count_ == 0) return r;
  const auto q = q_.leftCols(count_);
  // Two passes of classical Gram-Schmidt.
  r -= q * (q.adjoint() * r);
  r -= q * (q.adjoint() * r);
  return r;
}

bool SpanBuilder::contains(const Eigen::VectorXcd& v) const {
  const double n = v.norm();
  if (n <= floor_ || n == 0.0) return true;
  return residual(v).norm() <= std::max(rel_tol_ * n, floor_);
}

bool SpanBuilder::add(const Eigen::VectorXcd& v) {
  if (full()) return false;
  const double n = v.norm();
  if (n <= floor_ || n == 0.0) return false;
  Eigen::VectorXcd r = residual(v);
  const double rn = r.norm();
  if (rn <= std::max(rel_tol_ * n, floor_)) return false;
  if (count_ == q_.cols()) {
    q_.conservativeResize(Eigen::NoChange, std::min<Eigen::Index>(ambient_, 2 * q_.cols()));
  }
  q_.col(count_++) = r / rn;
  return true;
}

void SpanBuilder::add_columns(const Eigen::MatrixXcd& vs) {
  if (vs.cols() == 0 || full()) return;
  Eigen::MatrixXcd r = vs;
  if (count_ > 0) {
    const auto q = q_.leftCols(count_);
    r -= q * (q.adjoint() * vs);
  }
  // Columns already inside the current span stay inside as it grows.
  for (Eigen::Index c = 0; c < vs.cols() && !full(); ++c) {
    const double n = vs.col(c).norm();
    if (n <= floor_ || n == 0.0) continue;
    if (r.col(c).norm() <= 0.5 * std::max(rel_tol_ * n, floor_)) continue;
    add(vs.col(c));
  }
}

}  // namespace detail
}  // namespace locc
