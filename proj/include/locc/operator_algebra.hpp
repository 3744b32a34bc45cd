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

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locc/linalg.hpp"

namespace locc {

enum class Decision { kDistinguishable, kIndistinguishable, kNotApplicable };

std::string_view decision_name(Decision d);

/// A unital, adjoint-closed subspace of M_d with a trace-orthonormal basis.
struct OperatorSystem {
  std::size_t dim = 0;
  std::vector<ComplexMatrix> basis;
  bool contains_identity = false;
  bool closed_under_mult = false;

  std::size_t span_dim() const noexcept { return basis.size(); }
};

/// One summand M_m (x) I_n of a finite-dimensional C*-algebra.
struct Block {
  std::size_t m = 0;
  std::size_t n = 0;

  friend bool operator==(const Block&, const Block&) = default;
  friend auto operator<=>(const Block&, const Block&) = default;
};

struct AlgebraDecomposition {
  std::vector<Block> blocks;  // sorted
  std::size_t algebra_dim = 0;
  std::size_t ambient_dim = 0;
};

struct SeparatingCertificate {
  enum class Kind { kVector, kRefutingBlock };
  Kind kind = Kind::kVector;
  std::optional<Ket> vector;
  std::optional<Block> refuting_block;
  std::string report;
};

/// Operator system spanned by d x d matrices, their adjoints and I.
OperatorSystem operator_system_from_span(std::span<const ComplexMatrix> matrices,
                                         Tolerance tol = {});

/// S0 = span{U_i^* U_j, I}_{i != j}.
OperatorSystem build_operator_system(std::span<const ComplexMatrix> unitaries,
                                     Tolerance tol = {});

/// Smallest multiplicatively closed span containing S.
OperatorSystem algebra_closure(const OperatorSystem& s);

/// Block structure (m_k, n_k) of a unital *-algebra, via the center of the
/// commutant intersection and a random central element.
AlgebraDecomposition decompose(const OperatorSystem& a, std::uint64_t seed = kDefaultSeed);

/// Orthonormal basis of the commutant {X : XB = BX for all B in a}.
std::vector<ComplexMatrix> commutant(const OperatorSystem& a);
/// Orthonormal basis of a intersected with its commutant.
std::vector<ComplexMatrix> center(const OperatorSystem& a);

/// n_k >= m_k for every block.
bool has_separating_vector(const AlgebraDecomposition& dec);

bool is_separating(const OperatorSystem& a, const Ket& psi);

/// Samples separating vectors when the block criterion allows one; otherwise
/// returns the first refuting block. Throws SamplingFailed after 20 misses.
SeparatingCertificate find_separating_vector(const OperatorSystem& a,
                                             std::uint64_t seed = kDefaultSeed);

struct AlgebraVerdict {
  Decision decision = Decision::kNotApplicable;
  SeparatingCertificate certificate;
  OperatorSystem system;               // S0
  AlgebraDecomposition decomposition;  // of S0 when closed, else of its closure
  std::string report;
};

/// Decides distinguishability of {(I (x) U_i)|Phi>} when S0 is closed under
/// multiplication; reports kNotApplicable otherwise.
AlgebraVerdict decide_by_algebra(std::span<const ComplexMatrix> unitaries, Tolerance tol = {},
                                 std::uint64_t seed = kDefaultSeed);

/// Permutation form sigma with P|i> = |sigma(i)>.
std::vector<std::size_t> permutation_of(const ComplexMatrix& p, Tolerance tol = {});

/// Delta(P_j^* P_i) = 0 for every i != j, decided through derangements.
bool check_permutation_states(std::span<const ComplexMatrix> perms, Tolerance tol = {});

/// True iff the algebra generated by S0 is abelian.
bool check_simultaneous_schmidt(std::span<const ComplexMatrix> unitaries, Tolerance tol = {});

/// For unitaries with a simultaneous Schmidt decomposition and orthogonal
/// states, weighted states accepted by verify_weighted_states.
std::optional<WeightedStates> schmidt_weighted_states(std::span<const ComplexMatrix> unitaries,
                                                       Tolerance tol = {},
                                                       std::uint64_t seed = kDefaultSeed);

}  // namespace locc
