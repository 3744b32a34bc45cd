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
#include <string>
#include <string_view>
#include <vector>

#include "locc/linalg.hpp"

namespace locc {

/// n-qubit Pauli operator i^phase * (x)_j X^{x_j} Z^{z_j}, qubit 0 leftmost.
///
/// Y is stored as x = z = 1 with one extra factor of i (Y = iXZ), so a label
/// such as "Y" carries stored phase 1. Equality compares the phase too; use
/// same_up_to_phase() where the phase quotient is intended.
class PauliOp {
 public:
  static constexpr int kMaxQubits = 64;

  PauliOp() = default;
  PauliOp(int n, std::uint64_t x_bits, std::uint64_t z_bits, int phase = 0);

  static PauliOp identity(int n);
  /// Single-qubit `kind` in {'I','X','Y','Z'} on qubit `q`, identity elsewhere.
  static PauliOp single(int n, int q, char kind);

  int num_qubits() const noexcept { return n_; }
  std::uint64_t x_bits() const noexcept { return x_; }
  std::uint64_t z_bits() const noexcept { return z_; }
  /// Exponent p of the stored prefactor i^p, in [0, 4).
  int phase() const noexcept { return phase_; }
  bool x(int q) const noexcept { return (x_ >> q) & 1U; }
  bool z(int q) const noexcept { return (z_ >> q) & 1U; }
  /// Phase relative to the label form (Y counted as one letter).
  int label_phase() const noexcept;

  bool same_up_to_phase(const PauliOp& other) const noexcept {
    return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
  }

  friend bool operator==(const PauliOp&, const PauliOp&) = default;
  friend auto operator<=>(const PauliOp&, const PauliOp&) = default;

 private:
  int n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int phase_ = 0;
};

/// Operators on a common number of qubits, without repeated values.
class PauliSet {
 public:
  PauliSet() = default;
  explicit PauliSet(std::vector<PauliOp> ops);

  /// Appends op unless an equal value is present; returns whether appended.
  bool insert(const PauliOp& op);

  int num_qubits() const noexcept { return ops_.empty() ? 0 : ops_.front().num_qubits(); }
  std::size_t size() const noexcept { return ops_.size(); }
  bool empty() const noexcept { return ops_.empty(); }
  const std::vector<PauliOp>& ops() const noexcept { return ops_; }
  auto begin() const noexcept { return ops_.begin(); }
  auto end() const noexcept { return ops_.end(); }
  const PauliOp& operator[](std::size_t i) const { return ops_[i]; }

 private:
  std::vector<PauliOp> ops_;
};

PauliOp pauli_mul(const PauliOp& a, const PauliOp& b);
bool commutes(const PauliOp& a, const PauliOp& b);

/// Accepts an optional phase prefix ("+", "-", "i", "-i", "+i") before the
/// letters; letters are case-sensitive I, X, Y, Z.
PauliOp from_label(std::string_view label);
/// Inverse of from_label; the phase prefix is omitted when it is +1.
std::string to_label(const PauliOp& op);

ComplexMatrix to_dense(const PauliOp& op);
std::vector<ComplexMatrix> to_dense(const PauliSet& ops);
/// U^* P U for a user-supplied unitary U.
ComplexMatrix conjugate_by(const ComplexMatrix& u, const PauliOp& op, Tolerance tol = {});

/// GF(2) rank of the phase-free (x|z) vectors of the generators.
int subgroup_rank(const PauliSet& gens);
/// Dimension of span{dense(g) : g in <gens>}, equal to 2^rank.
std::uint64_t subgroup_span_dim(const PauliSet& gens);

/// {I,X,Y,Z}^{(x)k} (x) I^{(x)(n-k)}, label phase +1, in base-4 order.
PauliSet logical_pauli_set(int n, int k);

/// ({I,Z}^k (x) I^{n-k}) u (I^k (x) {I,Z}^{n-k}) u (X^k (x) {X,Y}^{n-k}).
PauliSet lattice_indistinguishable_set(int n, int k);

/// The set S1 = {Z_i : i < k} used to exhibit the lattice-set dimensions.
PauliSet lattice_generators_first(int n, int k);
/// The set S2 = {Z_i : i >= k} u {X^{(x)n}}.
PauliSet lattice_generators_second(int n, int k);

}  // namespace locc
