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

#include "locc/operator_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "numerics.hpp"

namespace locc {

using detail::SpanBuilder;
using detail::unvec;
using detail::vec;

std::string_view decision_name(Decision d) {
  switch (d) {
    case Decision::kDistinguishable: return "distinguishable";
    case Decision::kIndistinguishable: return "indistinguishable";
    case Decision::kNotApplicable: return "criterion_not_applicable";
  }
  return "unknown";
}

namespace {

Eigen::Index square_dimension(std::span<const ComplexMatrix> ms) {
  if (ms.empty()) throw LoccError(ErrorCode::kDimensionMismatch, "no matrices supplied");
  const auto d = ms.front().rows();
  for (const auto& m : ms) {
    if (m.rows() != d || m.cols() != d || d == 0) {
      throw LoccError(ErrorCode::kDimensionMismatch, "matrices must be square and of equal size");
    }
  }
  return d;
}

std::vector<ComplexMatrix> basis_matrices(const SpanBuilder& span, Eigen::Index d) {
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(span.dim()));
  for (Eigen::Index i = 0; i < span.dim(); ++i) out.push_back(unvec(span.column(i), d));
  return out;
}

Eigen::MatrixXcd stacked(const std::vector<ComplexMatrix>& basis, Eigen::Index d) {
  Eigen::MatrixXcd q(d * d, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) q.col(static_cast<Eigen::Index>(i)) = vec(basis[i]);
  return q;
}

// Every pairwise product of basis elements lies in the span.
bool products_stay_in_span(const std::vector<ComplexMatrix>& basis, Eigen::Index d) {
  const auto a = static_cast<Eigen::Index>(basis.size());
  if (a == d * d) return true;
  const Eigen::MatrixXcd q = stacked(basis, d);
  Eigen::MatrixXcd products(d * d, a);
  for (Eigen::Index i = 0; i < a; ++i) {
    for (Eigen::Index j = 0; j < a; ++j) {
      products.col(j) = vec(basis[static_cast<std::size_t>(i)] * basis[static_cast<std::size_t>(j)]);
    }
    const Eigen::MatrixXcd r = products - q * (q.adjoint() * products);
    for (Eigen::Index j = 0; j < a; ++j) {
      if (r.col(j).norm() > kRankTol * std::max(products.col(j).norm(), 1.0)) return false;
    }
  }
  return true;
}

OperatorSystem finish_system(const SpanBuilder& span, Eigen::Index d) {
  OperatorSystem s;
  s.dim = static_cast<std::size_t>(d);
  s.basis = basis_matrices(span, d);
  s.contains_identity = span.contains(vec(ComplexMatrix::Identity(d, d)));
  s.closed_under_mult = products_stay_in_span(s.basis, d);
  return s;
}

Block first_refuting_block(const AlgebraDecomposition& dec) {
  for (const auto& b : dec.blocks) {
    if (b.m > b.n) return b;
  }
  throw LoccError(ErrorCode::kNumerical, "no refuting block although the criterion failed");
}

SeparatingCertificate certificate_for(const OperatorSystem& a, const AlgebraDecomposition& dec,
                                      std::uint64_t seed) {
  SeparatingCertificate cert;
  if (!has_separating_vector(dec)) {
    const Block b = first_refuting_block(dec);
    cert.kind = SeparatingCertificate::Kind::kRefutingBlock;
    cert.refuting_block = b;
    std::ostringstream os;
    os << "block M_" << b.m << " (x) I_" << b.n << " has m > n, so no separating vector exists";
    cert.report = os.str();
    return cert;
  }
  constexpr int kRetries = 20;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    Ket psi = random_ket(a.dim, rng);
    if (is_separating(a, psi)) {
      cert.kind = SeparatingCertificate::Kind::kVector;
      cert.vector = std::move(psi);
      cert.report = "random vector separates the algebra (attempt " + std::to_string(attempt + 1) + ")";
      return cert;
    }
  }
  throw LoccError(ErrorCode::kSamplingFailed,
                  "no separating vector found in 20 samples although the block criterion holds");
}

std::string blocks_text(const AlgebraDecomposition& dec) {
  std::ostringstream os;
  os << "dim " << dec.algebra_dim << " on C^" << dec.ambient_dim << ", blocks {";
  for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
    os << (i ? ", " : "") << "(" << dec.blocks[i].m << "," << dec.blocks[i].n << ")";
  }
  os << "}";
  return os.str();
}

}  // namespace

OperatorSystem operator_system_from_span(std::span<const ComplexMatrix> matrices, Tolerance) {
  const auto d = square_dimension(matrices);
  SpanBuilder span(d * d);
  span.add(vec(ComplexMatrix::Identity(d, d)));
  for (const auto& m : matrices) {
    if (span.full()) break;
    span.add(vec(m));
    span.add(vec(m.adjoint()));
  }
  return finish_system(span, d);
}

OperatorSystem build_operator_system(std::span<const ComplexMatrix> unitaries, Tolerance) {
  const auto d = square_dimension(unitaries);
  SpanBuilder span(d * d);
  span.add(vec(ComplexMatrix::Identity(d, d)));
  const auto count = static_cast<Eigen::Index>(unitaries.size());
  for (Eigen::Index i = 0; i + 1 < count && !span.full(); ++i) {
    const ComplexMatrix ui_adj = unitaries[static_cast<std::size_t>(i)].adjoint();
    Eigen::MatrixXcd batch(d * d, 2 * (count - i - 1));
    for (Eigen::Index j = i + 1; j < count; ++j) {
      const ComplexMatrix m = ui_adj * unitaries[static_cast<std::size_t>(j)];
      batch.col(2 * (j - i - 1)) = vec(m);
      batch.col(2 * (j - i - 1) + 1) = vec(m.adjoint());
    }
    span.add_columns(batch);
  }
  return finish_system(span, d);
}

OperatorSystem algebra_closure(const OperatorSystem& s) {
  const auto d = static_cast<Eigen::Index>(s.dim);
  if (s.closed_under_mult) return s;
  SpanBuilder span(d * d, 1.0);
  for (const auto& b : s.basis) span.add(vec(b));
  Eigen::Index frontier_begin = 0;
  Eigen::Index frontier_end = span.dim();
  // Each round appends words one letter longer; the dimension is bounded by
  // d^2, so the loop runs at most d^2 rounds.
  for (Eigen::Index round = 0;; ++round) {
    if (round > d * d) throw LoccError(ErrorCode::kNumerical, "closure failed to stabilize");
    for (Eigen::Index f = frontier_begin; f < frontier_end && !span.full(); ++f) {
      const ComplexMatrix word = unvec(span.column(f), d);
      for (const auto& g : s.basis) {
        if (span.full()) break;
        span.add(vec(word * g));
      }
    }
    if (span.dim() == frontier_end) break;
    frontier_begin = frontier_end;
    frontier_end = span.dim();
  }
  OperatorSystem out;
  out.dim = s.dim;
  out.basis = basis_matrices(span, d);
  out.contains_identity = span.contains(vec(ComplexMatrix::Identity(d, d)));
  out.closed_under_mult = true;
  return out;
}

std::vector<ComplexMatrix> commutant(const OperatorSystem& a) {
  const auto d = static_cast<Eigen::Index>(a.dim);
  Eigen::MatrixXcd n = Eigen::MatrixXcd::Identity(d * d, d * d);
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  for (const auto& b : a.basis) {
    if (n.cols() <= 1) break;  // only scalars remain
    // Skip multiples of the identity; they commute with everything.
    const Complex t = b.trace() / static_cast<double>(d);
    if ((b - t * id).norm() <= kRankTol * b.norm()) continue;
    Eigen::MatrixXcd k(d * d, n.cols());
    for (Eigen::Index c = 0; c < n.cols(); ++c) {
      const ComplexMatrix x = unvec(n.col(c), d);
      k.col(c) = vec(x * b - b * x);
    }
    const Eigen::MatrixXcd null = detail::null_space(k, 1.0);
    n = n * null;
  }
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(n.cols()));
  for (Eigen::Index c = 0; c < n.cols(); ++c) out.push_back(unvec(n.col(c), d));
  return out;
}

std::vector<ComplexMatrix> center(const OperatorSystem& a) {
  const auto d = static_cast<Eigen::Index>(a.dim);
  const Eigen::MatrixXcd qa = stacked(a.basis, d);
  const Eigen::MatrixXcd qc = stacked(commutant(a), d);
  Eigen::MatrixXcd joint(d * d, qa.cols() + qc.cols());
  joint << qa, -qc;
  const Eigen::MatrixXcd null = detail::null_space(joint, 1.0);
  const Eigen::MatrixXcd z = detail::orthonormal_range(qa * null.topRows(qa.cols()));
  std::vector<ComplexMatrix> out;
  for (Eigen::Index c = 0; c < z.cols(); ++c) out.push_back(unvec(z.col(c), d));
  return out;
}

AlgebraDecomposition decompose(const OperatorSystem& a, std::uint64_t seed) {
  if (!a.closed_under_mult) {
    throw LoccError(ErrorCode::kNotAnAlgebra, "decompose requires a multiplicatively closed span");
  }
  const auto d = static_cast<Eigen::Index>(a.dim);
  const std::vector<ComplexMatrix> z = center(a);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const Complex i_unit(0.0, 1.0);

  constexpr int kAttempts = 5;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    ComplexMatrix h = ComplexMatrix::Zero(d, d);
    for (const auto& c : z) {
      const double r = normal(rng);
      const double s = normal(rng);
      h += 0.5 * r * (c + c.adjoint()) + 0.5 * s * i_unit * (c - c.adjoint());
    }
    h = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    const Eigen::VectorXd& ev = es.eigenvalues();
    const double scale = ev.cwiseAbs().maxCoeff();
    if (!(scale > 1e-12)) continue;
    const Eigen::VectorXd lam = ev / scale;

    AlgebraDecomposition dec;
    dec.algebra_dim = a.basis.size();
    dec.ambient_dim = a.dim;
    bool consistent = true;
    Eigen::Index start = 0;
    while (start < d && consistent) {
      Eigen::Index stop = start + 1;
      while (stop < d && lam(stop) - lam(stop - 1) <= kClusterGap) ++stop;
      const Eigen::MatrixXcd v = es.eigenvectors().middleCols(start, stop - start);
      const auto rank = static_cast<std::size_t>(stop - start);
      // B -> pBp is a trace-orthogonal projection of the algebra when p is
      // central, so dim(pAp) is the sum of squared norms over an
      // orthonormal basis.
      double weight = 0.0;
      for (const auto& b : a.basis) weight += (v.adjoint() * b * v).squaredNorm();
      const double rounded = std::round(weight);
      if (std::abs(weight - rounded) > 0.25) {
        consistent = false;
        break;
      }
      const auto block_dim = static_cast<std::size_t>(rounded);
      const auto m = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(block_dim))));
      if (m == 0 || m * m != block_dim || rank % m != 0) {
        consistent = false;
        break;
      }
      dec.blocks.push_back({m, rank / m});
      start = stop;
    }
    if (!consistent) continue;
    std::size_t sum_sq = 0;
    std::size_t sum_mn = 0;
    for (const auto& b : dec.blocks) {
      sum_sq += b.m * b.m;
      sum_mn += b.m * b.n;
    }
    if (sum_sq != dec.algebra_dim || sum_mn != a.dim) continue;
    std::sort(dec.blocks.begin(), dec.blocks.end());
    return dec;
  }
  throw LoccError(ErrorCode::kNumerical, "block decomposition failed dimension accounting");
}

bool has_separating_vector(const AlgebraDecomposition& dec) {
  return std::all_of(dec.blocks.begin(), dec.blocks.end(),
                     [](const Block& b) { return b.n >= b.m; });
}

bool is_separating(const OperatorSystem& a, const Ket& psi) {
  if (static_cast<std::size_t>(psi.size()) != a.dim) {
    throw LoccError(ErrorCode::kDimensionMismatch, "vector and algebra dimensions differ");
  }
  if (a.basis.size() > a.dim) return false;
  if (psi.norm() == 0.0) return false;
  ComplexMatrix images(psi.size(), static_cast<Eigen::Index>(a.basis.size()));
  for (std::size_t i = 0; i < a.basis.size(); ++i) {
    images.col(static_cast<Eigen::Index>(i)) = a.basis[i] * psi;
  }
  return numerical_rank(images) == a.basis.size();
}

SeparatingCertificate find_separating_vector(const OperatorSystem& a, std::uint64_t seed) {
  return certificate_for(a, decompose(a, seed), seed);
}

AlgebraVerdict decide_by_algebra(std::span<const ComplexMatrix> unitaries, Tolerance tol,
                                 std::uint64_t seed) {
  square_dimension(unitaries);
  for (std::size_t i = 0; i < unitaries.size(); ++i) {
    if (!is_unitary(unitaries[i], tol)) {
      throw LoccError(ErrorCode::kNonUnitary, "operator " + std::to_string(i) + " is not unitary");
    }
  }
  require_orthogonal_unitaries(unitaries, tol);

  AlgebraVerdict verdict;
  verdict.system = build_operator_system(unitaries, tol);
  if (!verdict.system.closed_under_mult) {
    verdict.decision = Decision::kNotApplicable;
    verdict.decomposition = decompose(algebra_closure(verdict.system), seed);
    verdict.report = "S0 (dim " + std::to_string(verdict.system.span_dim()) +
                     ") is not closed under multiplication; generated algebra has " +
                     blocks_text(verdict.decomposition);
    return verdict;
  }
  verdict.decomposition = decompose(verdict.system, seed);
  verdict.certificate = certificate_for(verdict.system, verdict.decomposition, seed);
  verdict.decision = verdict.certificate.kind == SeparatingCertificate::Kind::kVector
                         ? Decision::kDistinguishable
                         : Decision::kIndistinguishable;
  verdict.report = "S0 is a C*-algebra of " + blocks_text(verdict.decomposition) + "; " +
                   verdict.certificate.report;
  return verdict;
}

std::vector<std::size_t> permutation_of(const ComplexMatrix& p, Tolerance tol) {
  if (!is_permutation_matrix(p, tol)) {
    throw LoccError(ErrorCode::kNotPermutation, "matrix is not a permutation matrix");
  }
  std::vector<std::size_t> sigma(static_cast<std::size_t>(p.cols()));
  for (Eigen::Index c = 0; c < p.cols(); ++c) {
    Eigen::Index r = 0;
    p.col(c).cwiseAbs().maxCoeff(&r);
    sigma[static_cast<std::size_t>(c)] = static_cast<std::size_t>(r);
  }
  return sigma;
}

bool check_permutation_states(std::span<const ComplexMatrix> perms, Tolerance tol) {
  std::vector<std::vector<std::size_t>> sigmas;
  sigmas.reserve(perms.size());
  for (const auto& p : perms) sigmas.push_back(permutation_of(p, tol));
  square_dimension(perms);
  // sigma_j^{-1} sigma_i fixes k exactly when sigma_i(k) == sigma_j(k).
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    for (std::size_t j = i + 1; j < sigmas.size(); ++j) {
      for (std::size_t k = 0; k < sigmas[i].size(); ++k) {
        if (sigmas[i][k] == sigmas[j][k]) return false;
      }
    }
  }
  return true;
}

bool check_simultaneous_schmidt(std::span<const ComplexMatrix> unitaries, Tolerance tol) {
  const OperatorSystem s0 = build_operator_system(unitaries, tol);
  auto abelian = [&](const std::vector<ComplexMatrix>& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        if ((basis[i] * basis[j] - basis[j] * basis[i]).norm() > tol.abs) return false;
      }
    }
    return true;
  };
  if (!abelian(s0.basis)) return false;
  const OperatorSystem closure = algebra_closure(s0);
  return closure.basis.size() <= s0.dim && abelian(closure.basis);
}

std::optional<WeightedStates> schmidt_weighted_states(std::span<const ComplexMatrix> unitaries,
                                                       Tolerance tol, std::uint64_t seed) {
  const auto d = square_dimension(unitaries);
  for (std::size_t i = 0; i < unitaries.size(); ++i) {
    if (!is_unitary(unitaries[i], tol)) {
      throw LoccError(ErrorCode::kNonUnitary, "operator " + std::to_string(i) + " is not unitary");
    }
  }
  require_orthogonal_unitaries(unitaries, tol);
  if (!check_simultaneous_schmidt(unitaries, tol)) return std::nullopt;

  // Joint eigenbasis of the commuting normal family U_0^* U_i.
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const Complex i_unit(0.0, 1.0);
  const ComplexMatrix u0_adj = unitaries.front().adjoint();
  ComplexMatrix h = ComplexMatrix::Zero(d, d);
  for (std::size_t i = 1; i < unitaries.size(); ++i) {
    const ComplexMatrix a = u0_adj * unitaries[i];
    const double r = normal(rng);
    const double s = normal(rng);
    h += r * (a + a.adjoint()) + s * i_unit * (a - a.adjoint());
  }
  h = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  const ComplexMatrix& e = es.eigenvectors();

  WeightedStates ws;
  const double pi = std::acos(-1.0);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (Eigen::Index k = 0; k < d; ++k) {
    Ket f(d);
    for (Eigen::Index l = 0; l < d; ++l) {
      f(l) = norm * std::polar(1.0, 2.0 * pi * static_cast<double>(k * l) / static_cast<double>(d));
    }
    ws.states.push_back(e * f);
    ws.weights.push_back(1.0);
  }
  if (!verify_weighted_states(ws, unitaries, tol)) {
    throw LoccError(ErrorCode::kNumerical, "joint diagonalization did not yield valid states");
  }
  return ws;
}

}  // namespace locc
