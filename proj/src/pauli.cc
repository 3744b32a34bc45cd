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

#include "locc/pauli.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace locc {

namespace {

constexpr int kMaxDenseQubits = 12;

std::uint64_t qubit_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void require_same_n(const PauliOp& a, const PauliOp& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw LoccError(ErrorCode::kDimensionMismatch, "Pauli operators act on different qubit counts");
  }
}

void require_params(int n, int k) {
  if (n < 1 || n > PauliOp::kMaxQubits || k < 1 || k > n) {
    throw LoccError(ErrorCode::kBadParams,
                    "need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
}

// Maps qubit-ordered bits (qubit 0 = bit 0) to basis-index bits (qubit 0 =
// most significant).
std::uint64_t to_index_bits(std::uint64_t bits, int n) {
  std::uint64_t out = 0;
  for (int q = 0; q < n; ++q) {
    if ((bits >> q) & 1U) out |= std::uint64_t{1} << (n - 1 - q);
  }
  return out;
}

}  // namespace

PauliOp::PauliOp(int n, std::uint64_t x_bits, std::uint64_t z_bits, int phase)
    : n_(n), x_(x_bits), z_(z_bits), phase_(((phase % 4) + 4) % 4) {
  if (n < 0 || n > kMaxQubits) {
    throw LoccError(ErrorCode::kBadParams, "qubit count out of range");
  }
  if ((x_bits | z_bits) & ~qubit_mask(n)) {
    throw LoccError(ErrorCode::kBadParams, "bit strings exceed the qubit count");
  }
}

PauliOp PauliOp::identity(int n) { return PauliOp(n, 0, 0, 0); }

PauliOp PauliOp::single(int n, int q, char kind) {
  if (q < 0 || q >= n) throw LoccError(ErrorCode::kBadParams, "qubit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << q;
  switch (kind) {
    case 'I': return identity(n);
    case 'X': return PauliOp(n, bit, 0, 0);
    case 'Y': return PauliOp(n, bit, bit, 1);
    case 'Z': return PauliOp(n, 0, bit, 0);
    default: throw LoccError(ErrorCode::kBadLabel, std::string("unknown Pauli letter '") + kind + "'");
  }
}

int PauliOp::label_phase() const noexcept {
  const int ys = std::popcount(x_ & z_);
  return ((phase_ - ys) % 4 + 4) % 4;
}

PauliSet::PauliSet(std::vector<PauliOp> ops) {
  for (const auto& op : ops) insert(op);
}

bool PauliSet::insert(const PauliOp& op) {
  if (!ops_.empty() && op.num_qubits() != ops_.front().num_qubits()) {
    throw LoccError(ErrorCode::kDimensionMismatch, "PauliSet members must share a qubit count");
  }
  if (std::find(ops_.begin(), ops_.end(), op) != ops_.end()) return false;
  ops_.push_back(op);
  return true;
}

PauliOp pauli_mul(const PauliOp& a, const PauliOp& b) {
  require_same_n(a, b);
  // Z^{z_a} X^{x_b} = (-1)^{z_a . x_b} X^{x_b} Z^{z_a}
  const int phase = a.phase() + b.phase() + 2 * std::popcount(a.z_bits() & b.x_bits());
  return PauliOp(a.num_qubits(), a.x_bits() ^ b.x_bits(), a.z_bits() ^ b.z_bits(), phase);
}

bool commutes(const PauliOp& a, const PauliOp& b) {
  require_same_n(a, b);
  const int form = std::popcount(a.x_bits() & b.z_bits()) + std::popcount(b.x_bits() & a.z_bits());
  return form % 2 == 0;
}

PauliOp from_label(std::string_view label) {
  int phase = 0;
  std::string_view body = label;
  if (body.starts_with("+")) body.remove_prefix(1);
  if (body.starts_with("-")) {
    phase += 2;
    body.remove_prefix(1);
  }
  if (body.starts_with("i")) {
    phase += 1;
    body.remove_prefix(1);
  }
  if (body.empty()) throw LoccError(ErrorCode::kBadLabel, "empty Pauli label");
  if (body.size() > static_cast<std::size_t>(PauliOp::kMaxQubits)) {
    throw LoccError(ErrorCode::kBadLabel, "Pauli label too long");
  }
  const int n = static_cast<int>(body.size());
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  for (int q = 0; q < n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (body[q]) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Y': x |= bit; z |= bit; phase += 1; break;
      case 'Z': z |= bit; break;
      default:
        throw LoccError(ErrorCode::kBadLabel,
                        "invalid character '" + std::string(1, body[q]) + "' in label '" +
                            std::string(label) + "'");
    }
  }
  return PauliOp(n, x, z, phase);
}

std::string to_label(const PauliOp& op) {
  static constexpr const char* kPrefix[] = {"", "i", "-", "-i"};
  std::string out = kPrefix[op.label_phase()];
  for (int q = 0; q < op.num_qubits(); ++q) {
    const bool x = op.x(q);
    const bool z = op.z(q);
    out += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }
  return out;
}

ComplexMatrix to_dense(const PauliOp& op) {
  const int n = op.num_qubits();
  if (n > kMaxDenseQubits) {
    throw LoccError(ErrorCode::kTooLarge, "dense Pauli beyond 12 qubits");
  }
  static constexpr Complex kPowers[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::uint64_t d = std::uint64_t{1} << n;
  const std::uint64_t xm = to_index_bits(op.x_bits(), n);
  const std::uint64_t zm = to_index_bits(op.z_bits(), n);
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::uint64_t c = 0; c < d; ++c) {
    const int sign = std::popcount(zm & c) % 2 == 0 ? 0 : 2;
    m(static_cast<Eigen::Index>(c ^ xm), static_cast<Eigen::Index>(c)) =
        kPowers[(op.phase() + sign) % 4];
  }
  return m;
}

std::vector<ComplexMatrix> to_dense(const PauliSet& ops) {
  std::vector<ComplexMatrix> out;
  out.reserve(ops.size());
  for (const auto& op : ops) out.push_back(to_dense(op));
  return out;
}

ComplexMatrix conjugate_by(const ComplexMatrix& u, const PauliOp& op, Tolerance tol) {
  if (!is_unitary(u, tol)) throw LoccError(ErrorCode::kNonUnitary, "conjugating matrix is not unitary");
  const ComplexMatrix p = to_dense(op);
  if (u.rows() != p.rows()) {
    throw LoccError(ErrorCode::kDimensionMismatch, "unitary and Pauli sizes differ");
  }
  return u.adjoint() * p * u;
}

int subgroup_rank(const PauliSet& gens) {
  // Gaussian elimination over GF(2) on 128-bit (x|z) rows.
  struct Row {
    std::uint64_t x;
    std::uint64_t z;
  };
  std::vector<Row> rows;
  for (const auto& g : gens) rows.push_back({g.x_bits(), g.z_bits()});
  int rank = 0;
  const int n = gens.num_qubits();
  for (int col = 0; col < 2 * n && rank < static_cast<int>(rows.size()); ++col) {
    // Columns 0..n-1 address x bits and n..2n-1 address z bits.
    auto bit = [&](const Row& r) {
      return col < n ? ((r.x >> col) & 1U) != 0 : ((r.z >> (col - n)) & 1U) != 0;
    };
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), bit);
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) != rank && bit(rows[r])) {
        rows[r].x ^= rows[rank].x;
        rows[r].z ^= rows[rank].z;
      }
    }
    ++rank;
  }
  return rank;
}

std::uint64_t subgroup_span_dim(const PauliSet& gens) {
  const int rank = subgroup_rank(gens);
  if (rank > 62) throw LoccError(ErrorCode::kTooLarge, "span dimension exceeds 2^62");
  return std::uint64_t{1} << rank;
}

PauliSet logical_pauli_set(int n, int k) {
  require_params(n, k);
  if (k > 31) throw LoccError(ErrorCode::kTooLarge, "4^k operators do not fit in memory");
  static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
  const std::uint64_t count = std::uint64_t{1} << (2 * k);
  PauliSet out;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::string label(static_cast<std::size_t>(n), 'I');
    for (int q = 0; q < k; ++q) {
      label[q] = kLetters[(code >> (2 * (k - 1 - q))) & 3U];
    }
    out.insert(from_label(label));
  }
  return out;
}

namespace {

// Every label with `prefix` followed by each choice from `alphabet` on the
// remaining positions, in lexicographic order of choice indices.
void append_products(PauliSet& out, const std::string& prefix, int free_len,
                     const std::string& alphabet, const std::string& suffix) {
  const std::size_t base = alphabet.size();
  std::uint64_t count = 1;
  for (int i = 0; i < free_len; ++i) count *= base;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::string middle(static_cast<std::size_t>(free_len), ' ');
    std::uint64_t c = code;
    for (int i = free_len - 1; i >= 0; --i) {
      middle[i] = alphabet[c % base];
      c /= base;
    }
    out.insert(from_label(prefix + middle + suffix));
  }
}

}  // namespace

PauliSet lattice_indistinguishable_set(int n, int k) {
  require_params(n, k);
  if (n > 30) throw LoccError(ErrorCode::kTooLarge, "lattice set too large to enumerate");
  PauliSet out;
  append_products(out, "", k, "IZ", std::string(n - k, 'I'));
  append_products(out, std::string(k, 'I'), n - k, "IZ", "");
  append_products(out, std::string(k, 'X'), n - k, "XY", "");
  return out;
}

PauliSet lattice_generators_first(int n, int k) {
  require_params(n, k);
  PauliSet out;
  for (int i = 0; i < k; ++i) out.insert(PauliOp::single(n, i, 'Z'));
  return out;
}

PauliSet lattice_generators_second(int n, int k) {
  require_params(n, k);
  PauliSet out;
  for (int i = k; i < n; ++i) out.insert(PauliOp::single(n, i, 'Z'));
  out.insert(PauliOp(n, qubit_mask(n), 0, 0));
  return out;
}

}  // namespace locc
