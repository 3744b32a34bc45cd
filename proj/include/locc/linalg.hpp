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

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "locc/errors.hpp"

namespace locc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Ket = Eigen::VectorXcd;

/// Default absolute tolerance for zero and equality tests.
inline constexpr double kDefaultAbsTol = 1e-9;
/// Relative singular-value threshold for rank and span-membership decisions.
inline constexpr double kRankTol = 1e-7;
/// Eigenvalue gap used to separate spectral clusters of central elements.
inline constexpr double kClusterGap = 1e-6;
/// Seed used by every randomized routine unless the caller supplies one.
inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

struct Tolerance {
  double abs = kDefaultAbsTol;

  Tolerance() = default;
  explicit Tolerance(double value);
};

/// A d x r matrix W with W W^* = I_d.
class PartialIsometry {
 public:
  explicit PartialIsometry(ComplexMatrix w, Tolerance tol = {});

  const ComplexMatrix& matrix() const noexcept { return w_; }

 private:
  ComplexMatrix w_;
};

struct Povm {
  std::vector<ComplexMatrix> elements;
  Tolerance tol;
};

/// States |phi_k> with weights m_k meant to resolve the identity.
struct WeightedStates {
  std::vector<Ket> states;
  std::vector<double> weights;
};

// Basic algebra. Index convention: |i> (x) |j> -> i * dim(B) + j.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
Ket kron_ket(const Ket& u, const Ket& v);
Complex inner(const Ket& u, const Ket& v);
ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix outer(const Ket& u, const Ket& v);

bool is_unitary(const ComplexMatrix& u, Tolerance tol = {});
bool is_hermitian(const ComplexMatrix& m, Tolerance tol = {});
bool is_permutation_matrix(const ComplexMatrix& p, Tolerance tol = {});
/// Smallest eigenvalue of (M + M^*) / 2.
double min_hermitian_eigenvalue(const ComplexMatrix& m);
std::size_t numerical_rank(const ComplexMatrix& m, double rel_tol = kRankTol);
Ket normalized(const Ket& v);

/// Returns (I (x) U)|Phi> with |Phi> = d^{-1/2} sum_i |ii>.
Ket max_entangled(const ComplexMatrix& u, Tolerance tol = {});

/// Zeros every off-diagonal entry.
ComplexMatrix map_to_diagonal(const ComplexMatrix& m);

bool validate_povm(const Povm& p);

/// Throws NotOrthogonalStates unless the maximally entangled states
/// (I (x) U_i)|Phi> are mutually orthogonal, i.e. Tr(U_j^* U_i) = 0.
void require_orthogonal_unitaries(std::span<const ComplexMatrix> unitaries,
                                  Tolerance tol = {});

/// sum_k m_k |phi_k><phi_k| = I and
/// <phi_k| U_j^* U_i |phi_k> = 0 for all k and i != j.
bool verify_weighted_states(const WeightedStates& ws,
                             std::span<const ComplexMatrix> unitaries,
                             Tolerance tol = {});

/// Every diagonal entry of W^* U_j^* U_i W vanishes, i != j.
bool verify_isometry_condition(const PartialIsometry& w,
                               std::span<const ComplexMatrix> unitaries,
                               Tolerance tol = {});

/// Weighted states induced by the columns of W (zero columns dropped).
WeightedStates weighted_states_from_isometry(const PartialIsometry& w);

// Seeded random generation.
Ket random_ket(std::size_t dim, std::mt19937_64& rng);
ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64& rng);

}  // namespace locc
