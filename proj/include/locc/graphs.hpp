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

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "locc/linalg.hpp"
#include "locc/operator_algebra.hpp"
#include "locc/states.hpp"

namespace locc {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph on vertices 0..r-1.
class Graph {
 public:
  explicit Graph(std::size_t vertex_count = 0);
  static Graph from_edges(std::size_t vertex_count, const std::vector<Edge>& edges);
  static Graph complete(std::size_t vertex_count);

  std::size_t vertex_count() const noexcept { return n_; }
  bool adjacent(std::size_t u, std::size_t v) const;
  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;
  std::size_t degree(std::size_t v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(std::size_t u, std::size_t v) const;

  std::size_t n_;
  std::vector<unsigned char> adj_;
};

struct CliqueCover {
  std::vector<std::vector<std::size_t>> parts;

  std::size_t size() const noexcept { return parts.size(); }
};

/// Edge {i, j} iff the normalized overlap |<u_i, u_j>| exceeds tol.
Graph graph_from_vectors(const std::vector<Ket>& kets, Tolerance tol = {});
/// Pairs whose normalized overlap lies within three decades of tol.
std::vector<Edge> borderline_pairs(const std::vector<Ket>& kets, Tolerance tol = {});

Graph alice_graph(const ProductStateSet& s, Tolerance tol = {});
Graph bob_graph(const ProductStateSet& s, Tolerance tol = {});

Graph complement(const Graph& g);
bool is_subgraph(const Graph& g1, const Graph& g2);
bool is_clique_cover(const Graph& g, const CliqueCover& cover);

/// Exact search is limited to this many vertices.
inline constexpr std::size_t kMaxCliqueCoverVertices = 20;

/// A minimum clique cover (vertices and edges), exact.
CliqueCover minimum_clique_cover(const Graph& g);
std::size_t clique_cover_number(const Graph& g);
/// A clique cover with at most max_parts parts, if one exists.
std::optional<CliqueCover> find_clique_cover(const Graph& g, std::size_t max_parts);

/// Checks the three conditions of the product-state characterization: the
/// sandwich G_A <= G <= complement(G_B), the clique cover of G, and a POVM
/// with Q_j phi(v) = 0 whenever v is not in V_j (elements matched by index).
bool verify_product_protocol(const ProductStateSet& s, const Graph& g, const CliqueCover& cover,
                             const Povm& povm, Tolerance tol = {});

/// Witness for a single-qubit sender: V = v1 u v2, both independent in G_B,
/// every edge of G_A inside v1 or inside v2.
struct QubitSenderCertificate {
  std::vector<std::size_t> v1;
  std::vector<std::size_t> v2;
  std::array<Ket, 2> alice_basis;
  /// Per Alice outcome, Bob's orthonormal states and the vertices they name.
  std::array<std::vector<Ket>, 2> bob_measurements;
  std::array<std::vector<std::size_t>, 2> bob_labels;
};

struct QubitSenderDecision {
  Decision decision = Decision::kIndistinguishable;
  std::optional<QubitSenderCertificate> certificate;
};

/// Graph-level search for (V1, V2); lexicographically smallest assignment
/// under the per-vertex order {V1} < {V2} < {V1, V2}.
std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
find_two_clique_sandwich(const Graph& g_a, const Graph& g_b);

QubitSenderDecision decide_qubit_sender(const ProductStateSet& s, Tolerance tol = {});

/// Alice's basis and Bob's per-outcome measurements, with a completing
/// projector labelled -1 when Bob's states do not span.
OneWayProtocol extract_qubit_protocol(const ProductStateSet& s,
                                      const QubitSenderCertificate& cert, Tolerance tol = {});

}  // namespace locc
