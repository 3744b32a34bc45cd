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

#include "locc/oracle.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace locc {

bool sandwich_enumerate(const Graph& g_a, const Graph& gb_bar) {
  if (!is_subgraph(g_a, gb_bar)) {
    throw LoccError(ErrorCode::kBadParams, "G_A is not a subgraph of the complement of G_B");
  }
  std::vector<Edge> free_edges;
  for (const auto& e : gb_bar.edges()) {
    if (!g_a.adjacent(e.first, e.second)) free_edges.push_back(e);
  }
  if (free_edges.size() > kMaxSandwichFreeEdges) {
    throw LoccError(ErrorCode::kTooLarge, "too many optional edges to enumerate");
  }
  const std::uint64_t count = std::uint64_t{1} << free_edges.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Graph g = g_a;
    for (std::size_t i = 0; i < free_edges.size(); ++i) {
      if ((mask >> i) & 1U) g.add_edge(free_edges[i].first, free_edges[i].second);
    }
    if (find_clique_cover(g, 2).has_value()) return true;
  }
  return false;
}

OracleReport randomized_separating_oracle(const OperatorSystem& a, int trials, std::uint64_t seed) {
  OracleReport report;
  report.method = OracleMethod::kRandomizedSeparating;
  report.seed = seed;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    if (is_separating(a, random_ket(a.dim, rng))) {
      report.verdict = true;
      report.trials = t + 1;
      report.note = "separating vector sampled";
      return report;
    }
  }
  report.verdict = false;
  report.trials = trials;
  report.note = "no separating vector in " + std::to_string(trials) +
                " samples; separating vectors are generic when they exist";
  return report;
}

std::size_t dense_pauli_oracle(const PauliSet& ops) {
  if (ops.empty()) throw LoccError(ErrorCode::kBadParams, "empty generator set");
  const int n = ops.num_qubits();
  if (n > 5) throw LoccError(ErrorCode::kTooLarge, "dense Pauli oracle is limited to 5 qubits");
  const auto d = static_cast<Eigen::Index>(1) << n;
  const double dd = static_cast<double>(d);

  // Group closure by dense multiplication, elements identified up to phase
  // through |Tr(A^* B)| = d.
  std::vector<ComplexMatrix> group{ComplexMatrix::Identity(d, d)};
  std::vector<ComplexMatrix> gens = to_dense(ops);
  auto known = [&](const ComplexMatrix& m) {
    return std::any_of(group.begin(), group.end(), [&](const ComplexMatrix& g) {
      return std::abs(std::abs((g.adjoint() * m).trace()) - dd) < 1e-6;
    });
  };
  for (std::size_t frontier = 0; frontier < group.size(); ++frontier) {
    for (const auto& g : gens) {
      ComplexMatrix next = group[frontier] * g;
      if (!known(next)) group.push_back(std::move(next));
    }
  }
  Eigen::MatrixXcd vectors(d * d, static_cast<Eigen::Index>(group.size()));
  for (std::size_t i = 0; i < group.size(); ++i) {
    vectors.col(static_cast<Eigen::Index>(i)) =
        Eigen::Map<const Eigen::VectorXcd>(group[i].data(), d * d);
  }
  const Eigen::MatrixXcd gram = vectors.adjoint() * vectors;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = es.eigenvalues();
  const double top = ev.maxCoeff();
  return static_cast<std::size_t>((ev.array() > 1e-9 * top).count());
}

SimulationReport simulate_one_way_protocol_report(const StateSet& states,
                                                  const OneWayProtocol& protocol, Tolerance tol) {
  auto invalid = [](const std::string& why) { return LoccError(ErrorCode::kInvalidProtocol, why); };
  const auto da = static_cast<Eigen::Index>(states.dim_a);
  const auto db = static_cast<Eigen::Index>(states.dim_b);
  if (protocol.alice.empty()) throw invalid("Alice has no measurement operators");
  if (protocol.bob.size() != protocol.alice.size()) {
    throw invalid("Bob needs one POVM per Alice outcome");
  }
  if (!protocol.labels.empty() && protocol.labels.size() != protocol.alice.size()) {
    throw invalid("labels must cover every Alice outcome");
  }
  for (const auto& a : protocol.alice) {
    if (a.rows() != da || a.cols() != da) throw invalid("Alice operator has the wrong dimension");
  }
  if (!validate_povm(Povm{protocol.alice, tol})) throw invalid("Alice's operators are not a POVM");
  for (std::size_t k = 0; k < protocol.bob.size(); ++k) {
    for (const auto& b : protocol.bob[k]) {
      if (b.rows() != db || b.cols() != db) throw invalid("Bob operator has the wrong dimension");
    }
    if (!validate_povm(Povm{protocol.bob[k], tol})) {
      throw invalid("Bob's operators for outcome " + std::to_string(k) + " are not a POVM");
    }
    if (!protocol.labels.empty() && protocol.labels[k].size() != protocol.bob[k].size()) {
      throw invalid("labels must cover every Bob outcome");
    }
  }
  for (const auto& ket : states.kets) {
    if (ket.size() != da * db) throw invalid("state dimension differs from dA * dB");
  }

  // prob[i][k][j] = <psi_i| A_k (x) B_kj |psi_i>, computed on the dA x dB
  // coefficient matrix Psi (row-major basis index a * dB + b).
  const std::size_t n_states = states.kets.size();
  std::vector<std::vector<std::vector<double>>> prob(n_states);
  for (std::size_t i = 0; i < n_states; ++i) {
    ComplexMatrix psi(da, db);
    for (Eigen::Index a = 0; a < da; ++a) {
      for (Eigen::Index b = 0; b < db; ++b) psi(a, b) = states.kets[i](a * db + b);
    }
    prob[i].resize(protocol.alice.size());
    for (std::size_t k = 0; k < protocol.alice.size(); ++k) {
      const ComplexMatrix left = protocol.alice[k] * psi;
      for (const auto& b : protocol.bob[k]) {
        const ComplexMatrix image = left * b.transpose();
        prob[i][k].push_back(psi.conjugate().cwiseProduct(image).sum().real());
      }
    }
  }

  std::vector<std::vector<long>> labels = protocol.labels;
  if (labels.empty()) {
    labels.resize(protocol.alice.size());
    for (std::size_t k = 0; k < protocol.alice.size(); ++k) {
      for (std::size_t j = 0; j < protocol.bob[k].size(); ++j) {
        long best = -1;
        double best_p = tol.abs;
        for (std::size_t i = 0; i < n_states; ++i) {
          if (prob[i][k][j] > best_p) {
            best_p = prob[i][k][j];
            best = static_cast<long>(i);
          }
        }
        labels[k].push_back(best);
      }
    }
  }

  SimulationReport report;
  report.success = true;
  for (std::size_t i = 0; i < n_states; ++i) {
    double error = 0.0;
    for (std::size_t k = 0; k < protocol.alice.size(); ++k) {
      for (std::size_t j = 0; j < protocol.bob[k].size(); ++j) {
        if (labels[k][j] != static_cast<long>(i)) error += std::max(0.0, prob[i][k][j]);
      }
    }
    if (error > report.worst_error) {
      report.worst_error = error;
      report.worst_state = i;
    }
    if (error > tol.abs) report.success = false;
  }
  return report;
}

bool simulate_one_way_protocol(const StateSet& states, const OneWayProtocol& protocol,
                               Tolerance tol) {
  return simulate_one_way_protocol_report(states, protocol, tol).success;
}

}  // namespace locc
