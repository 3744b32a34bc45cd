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

#include "locc/graphs.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <cmath>
#include <cstdint>
#include <string>

namespace locc {

Graph::Graph(std::size_t vertex_count) : n_(vertex_count), adj_(vertex_count * vertex_count, 0) {}

Graph Graph::from_edges(std::size_t vertex_count, const std::vector<Edge>& edges) {
  Graph g(vertex_count);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::complete(std::size_t vertex_count) { return complement(Graph(vertex_count)); }

void Graph::check_pair(std::size_t u, std::size_t v) const {
  if (u >= n_ || v >= n_) {
    throw LoccError(ErrorCode::kVertexCountMismatch,
                    "vertex index out of range for a graph on " + std::to_string(n_) + " vertices");
  }
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  check_pair(u, v);
  return adj_[u * n_ + v] != 0;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  check_pair(u, v);
  if (u == v) throw LoccError(ErrorCode::kBadParams, "simple graphs have no loops");
  adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
}

void Graph::remove_edge(std::size_t u, std::size_t v) {
  check_pair(u, v);
  adj_[u * n_ + v] = adj_[v * n_ + u] = 0;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) {
      if (adj_[u * n_ + v]) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::edge_count() const {
  return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), 1)) / 2;
}

std::size_t Graph::degree(std::size_t v) const {
  check_pair(v, v);
  return static_cast<std::size_t>(
      std::count(adj_.begin() + static_cast<std::ptrdiff_t>(v * n_),
                 adj_.begin() + static_cast<std::ptrdiff_t>((v + 1) * n_), 1));
}

namespace {

std::vector<Ket> unit_kets(const std::vector<Ket>& kets) {
  std::vector<Ket> out;
  out.reserve(kets.size());
  for (std::size_t i = 0; i < kets.size(); ++i) {
    if (kets[i].size() != kets.front().size()) {
      throw LoccError(ErrorCode::kDimensionMismatch, "kets differ in dimension");
    }
    if (kets[i].norm() == 0.0) {
      throw LoccError(ErrorCode::kZeroVector, "vertex " + std::to_string(i) + " has a zero vector");
    }
    out.push_back(kets[i].normalized());
  }
  return out;
}

}  // namespace

Graph graph_from_vectors(const std::vector<Ket>& kets, Tolerance tol) {
  const auto units = unit_kets(kets);
  Graph g(units.size());
  for (std::size_t i = 0; i < units.size(); ++i) {
    for (std::size_t j = i + 1; j < units.size(); ++j) {
      if (std::abs(units[i].dot(units[j])) > tol.abs) g.add_edge(i, j);
    }
  }
  return g;
}

std::vector<Edge> borderline_pairs(const std::vector<Ket>& kets, Tolerance tol) {
  const auto units = unit_kets(kets);
  std::vector<Edge> out;
  for (std::size_t i = 0; i < units.size(); ++i) {
    for (std::size_t j = i + 1; j < units.size(); ++j) {
      const double overlap = std::abs(units[i].dot(units[j]));
      if (overlap > tol.abs * 1e-3 && overlap < tol.abs * 1e3) out.emplace_back(i, j);
    }
  }
  return out;
}

Graph alice_graph(const ProductStateSet& s, Tolerance tol) {
  return graph_from_vectors(s.alice_kets(), tol);
}

Graph bob_graph(const ProductStateSet& s, Tolerance tol) {
  return graph_from_vectors(s.bob_kets(), tol);
}

Graph complement(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Graph out(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

bool is_subgraph(const Graph& g1, const Graph& g2) {
  if (g1.vertex_count() != g2.vertex_count()) {
    throw LoccError(ErrorCode::kVertexCountMismatch, "graphs have different vertex counts");
  }
  for (const auto& [u, v] : g1.edges()) {
    if (!g2.adjacent(u, v)) return false;
  }
  return true;
}

bool is_clique_cover(const Graph& g, const CliqueCover& cover) {
  const std::size_t n = g.vertex_count();
  std::vector<char> covered_vertex(n, 0);
  Graph covered_edges(n);
  for (const auto& part : cover.parts) {
    for (std::size_t a = 0; a < part.size(); ++a) {
      if (part[a] >= n) {
        throw LoccError(ErrorCode::kVertexCountMismatch, "cover names a vertex outside the graph");
      }
      covered_vertex[part[a]] = 1;
      for (std::size_t b = a + 1; b < part.size(); ++b) {
        if (part[a] == part[b]) continue;
        if (!g.adjacent(part[a], part[b])) return false;
        covered_edges.add_edge(part[a], part[b]);
      }
    }
  }
  if (std::find(covered_vertex.begin(), covered_vertex.end(), 0) != covered_vertex.end()) return false;
  return covered_edges == g;
}

namespace {

constexpr std::size_t kMaxEdges = kMaxCliqueCoverVertices * (kMaxCliqueCoverVertices - 1) / 2;
using EdgeSet = std::bitset<kMaxEdges>;
using VertexSet = std::uint32_t;

class EdgeCliqueCoverSearch {
 public:
  explicit EdgeCliqueCoverSearch(const Graph& g) : n_(g.vertex_count()) {
    if (n_ > kMaxCliqueCoverVertices) {
      throw LoccError(ErrorCode::kTooLarge, "exact clique cover is limited to 20 vertices");
    }
    adj_.assign(n_, 0);
    edge_index_.assign(n_ * n_, -1);
    for (const auto& [u, v] : g.edges()) {
      adj_[u] |= VertexSet{1} << v;
      adj_[v] |= VertexSet{1} << u;
      edge_index_[u * n_ + v] = edge_index_[v * n_ + u] = static_cast<int>(edge_count_++);
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (adj_[v] == 0) isolated_.push_back(v);
    }
    VertexSet candidates = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (adj_[v] != 0) candidates |= VertexSet{1} << v;
    }
    bron_kerbosch(0, candidates, 0);
    for (const VertexSet c : cliques_) {
      EdgeSet e;
      for (std::size_t u = 0; u < n_; ++u) {
        if (!((c >> u) & 1U)) continue;
        for (std::size_t v = u + 1; v < n_; ++v) {
          if ((c >> v) & 1U) e.set(static_cast<std::size_t>(edge_index_[u * n_ + v]));
        }
      }
      max_clique_edges_ = std::max(max_clique_edges_, e.count());
      clique_edges_.push_back(e);
    }
  }

  std::size_t isolated_count() const { return isolated_.size(); }

  /// Searches for an edge cover using fewer than `bound` cliques; returns the
  /// best found (indices into the maximal-clique list).
  std::optional<std::vector<std::size_t>> solve(std::size_t bound, bool stop_at_first) {
    stop_at_first_ = stop_at_first;
    best_size_ = bound;
    best_.reset();
    EdgeSet all;
    for (std::size_t i = 0; i < edge_count_; ++i) all.set(i);
    std::vector<std::size_t> chosen;
    dfs(all, chosen);
    return best_;
  }

  CliqueCover to_cover(const std::vector<std::size_t>& chosen) const {
    CliqueCover cover;
    for (const std::size_t idx : chosen) {
      std::vector<std::size_t> part;
      for (std::size_t v = 0; v < n_; ++v) {
        if ((cliques_[idx] >> v) & 1U) part.push_back(v);
      }
      cover.parts.push_back(std::move(part));
    }
    for (const std::size_t v : isolated_) cover.parts.push_back({v});
    std::sort(cover.parts.begin(), cover.parts.end());
    return cover;
  }

  std::size_t greedy_size() const {
    EdgeSet uncovered;
    for (std::size_t i = 0; i < edge_count_; ++i) uncovered.set(i);
    std::size_t used = 0;
    while (uncovered.any()) {
      std::size_t best = 0;
      std::size_t gain = 0;
      for (std::size_t c = 0; c < clique_edges_.size(); ++c) {
        const std::size_t g = (clique_edges_[c] & uncovered).count();
        if (g > gain) {
          gain = g;
          best = c;
        }
      }
      uncovered &= ~clique_edges_[best];
      ++used;
    }
    return used;
  }

 private:
  void bron_kerbosch(VertexSet r, VertexSet p, VertexSet x) {
    if (p == 0 && x == 0) {
      cliques_.push_back(r);
      return;
    }
    // Pivot on the vertex of P u X with the most neighbours in P.
    const VertexSet px = p | x;
    std::size_t pivot = 0;
    int best = -1;
    for (std::size_t u = 0; u < n_; ++u) {
      if (!((px >> u) & 1U)) continue;
      const int cnt = std::popcount(p & adj_[u]);
      if (cnt > best) {
        best = cnt;
        pivot = u;
      }
    }
    VertexSet candidates = p & ~adj_[pivot];
    while (candidates != 0) {
      const auto v = static_cast<std::size_t>(std::countr_zero(candidates));
      const VertexSet bit = VertexSet{1} << v;
      bron_kerbosch(r | bit, p & adj_[v], x & adj_[v]);
      p &= ~bit;
      x |= bit;
      candidates &= ~bit;
    }
  }

  void dfs(const EdgeSet& uncovered, std::vector<std::size_t>& chosen) {
    if (done_) return;
    const std::size_t remaining = uncovered.count();
    if (remaining == 0) {
      if (chosen.size() < best_size_) {
        best_size_ = chosen.size();
        best_ = chosen;
        if (stop_at_first_) done_ = true;
      }
      return;
    }
    const std::size_t lower = (remaining + max_clique_edges_ - 1) / max_clique_edges_;
    if (chosen.size() + lower >= best_size_) return;

    // Branch on the uncovered edge that the fewest maximal cliques contain.
    std::size_t pick_count = SIZE_MAX;
    std::vector<std::size_t> options;
    for (std::size_t e = 0; e < edge_count_; ++e) {
      if (!uncovered.test(e)) continue;
      std::vector<std::size_t> containing;
      for (std::size_t c = 0; c < clique_edges_.size(); ++c) {
        if (clique_edges_[c].test(e)) containing.push_back(c);
      }
      if (containing.size() < pick_count) {
        pick_count = containing.size();
        options = std::move(containing);
        if (pick_count == 1) break;
      }
    }
    std::stable_sort(options.begin(), options.end(), [&](std::size_t a, std::size_t b) {
      return (clique_edges_[a] & uncovered).count() > (clique_edges_[b] & uncovered).count();
    });
    for (const std::size_t c : options) {
      chosen.push_back(c);
      dfs(uncovered & ~clique_edges_[c], chosen);
      chosen.pop_back();
      if (done_) return;
    }
  }

  std::size_t n_;
  std::vector<VertexSet> adj_;
  std::vector<int> edge_index_;
  std::size_t edge_count_ = 0;
  std::vector<std::size_t> isolated_;
  std::vector<VertexSet> cliques_;
  std::vector<EdgeSet> clique_edges_;
  std::size_t max_clique_edges_ = 1;
  std::size_t best_size_ = 0;
  std::optional<std::vector<std::size_t>> best_;
  bool stop_at_first_ = false;
  bool done_ = false;
};

}  // namespace

CliqueCover minimum_clique_cover(const Graph& g) {
  EdgeCliqueCoverSearch search(g);
  const std::size_t greedy = search.greedy_size();
  // Look for something strictly better than greedy + 1, i.e. at most greedy.
  auto best = search.solve(greedy + 1, false);
  if (!best) throw LoccError(ErrorCode::kNumerical, "clique cover search found no cover");
  return search.to_cover(*best);
}

std::size_t clique_cover_number(const Graph& g) { return minimum_clique_cover(g).size(); }

std::optional<CliqueCover> find_clique_cover(const Graph& g, std::size_t max_parts) {
  EdgeCliqueCoverSearch search(g);
  if (search.isolated_count() > max_parts) return std::nullopt;
  const std::size_t budget = max_parts - search.isolated_count();
  auto found = search.solve(budget + 1, true);
  if (!found) return std::nullopt;
  return search.to_cover(*found);
}

namespace {

std::size_t alice_span_rank(const ProductStateSet& s) {
  ComplexMatrix m(static_cast<Eigen::Index>(s.dim_a()), static_cast<Eigen::Index>(s.size()));
  for (std::size_t k = 0; k < s.size(); ++k) m.col(static_cast<Eigen::Index>(k)) = s.states()[k].alice;
  return numerical_rank(m);
}

void require_orthogonal_products(const Graph& g_a, const Graph& g_b) {
  if (!is_subgraph(g_a, complement(g_b))) {
    throw LoccError(ErrorCode::kNotOrthogonalStates,
                    "product states are not mutually orthogonal (G_A is not inside the complement of G_B)");
  }
}

}  // namespace

bool verify_product_protocol(const ProductStateSet& s, const Graph& g, const CliqueCover& cover,
                             const Povm& povm, Tolerance tol) {
  if (g.vertex_count() != s.size()) {
    throw LoccError(ErrorCode::kVertexCountMismatch, "graph and state set sizes differ");
  }
  if (alice_span_rank(s) < s.dim_a()) {
    throw LoccError(ErrorCode::kNotSpanning, "Alice's states do not span her space");
  }
  const Graph g_a = alice_graph(s, tol);
  const Graph g_b = bob_graph(s, tol);
  require_orthogonal_products(g_a, g_b);
  for (const auto& q : povm.elements) {
    if (static_cast<std::size_t>(q.rows()) != s.dim_a()) {
      throw LoccError(ErrorCode::kInvalidPovm, "POVM acts on the wrong dimension");
    }
  }
  if (!validate_povm(povm)) throw LoccError(ErrorCode::kInvalidPovm, "operators do not form a POVM");

  if (!is_subgraph(g_a, g) || !is_subgraph(g, complement(g_b))) return false;
  if (!is_clique_cover(g, cover)) return false;
  if (povm.elements.size() != cover.size()) return false;
  for (std::size_t j = 0; j < cover.size(); ++j) {
    std::vector<char> in_part(s.size(), 0);
    for (const std::size_t v : cover.parts[j]) in_part[v] = 1;
    for (std::size_t v = 0; v < s.size(); ++v) {
      if (in_part[v]) continue;
      if ((povm.elements[j] * s.states()[v].alice).norm() > tol.abs) return false;
    }
  }
  return true;
}

std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
find_two_clique_sandwich(const Graph& g_a, const Graph& g_b) {
  const std::size_t n = g_a.vertex_count();
  if (g_b.vertex_count() != n) {
    throw LoccError(ErrorCode::kVertexCountMismatch, "Alice and Bob graphs differ in size");
  }
  // label 0: V1 only, 1: V2 only, 2: both.
  auto in1 = [](int label) { return label != 1; };
  auto in2 = [](int label) { return label != 0; };
  std::vector<int> labels(n, -1);
  auto consistent = [&](std::size_t v) {
    for (std::size_t u = 0; u < v; ++u) {
      const int lu = labels[u];
      const int lv = labels[v];
      if (g_a.adjacent(u, v) && !((in1(lu) && in1(lv)) || (in2(lu) && in2(lv)))) return false;
      if (g_b.adjacent(u, v) && ((in1(lu) && in1(lv)) || (in2(lu) && in2(lv)))) return false;
    }
    return true;
  };
  std::size_t v = 0;
  while (true) {
    if (v == n) break;
    ++labels[v];
    if (labels[v] > 2) {
      labels[v] = -1;
      if (v == 0) return std::nullopt;
      --v;
      continue;
    }
    if (consistent(v)) ++v;
  }
  std::vector<std::size_t> v1;
  std::vector<std::size_t> v2;
  for (std::size_t u = 0; u < n; ++u) {
    if (in1(labels[u])) v1.push_back(u);
    if (in2(labels[u])) v2.push_back(u);
  }
  return std::make_pair(std::move(v1), std::move(v2));
}

namespace {

std::vector<Ket> orthonormalize(const std::vector<Ket>& kets, Tolerance tol) {
  std::vector<Ket> out;
  for (const auto& k : kets) {
    Ket r = k;
    for (const auto& q : out) r -= q.dot(r) * q;
    const double n = r.norm();
    if (n < 1.0 - std::sqrt(tol.abs) * 10.0) {
      throw LoccError(ErrorCode::kInvalidCertificate, "Bob's states for an outcome are not orthogonal");
    }
    out.push_back(r / n);
  }
  return out;
}

bool includes_all(const std::vector<std::size_t>& big, const std::vector<std::size_t>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

QubitSenderCertificate build_certificate(const ProductStateSet& s, std::vector<std::size_t> v1,
                                         std::vector<std::size_t> v2, Tolerance tol) {
  QubitSenderCertificate cert;
  cert.v1 = std::move(v1);
  cert.v2 = std::move(v2);
  const auto bob_states = [&](const std::vector<std::size_t>& part) {
    std::vector<Ket> kets;
    for (const std::size_t v : part) kets.push_back(s.states()[v].bob);
    return orthonormalize(kets, tol);
  };
  if (includes_all(cert.v1, cert.v2) || includes_all(cert.v2, cert.v1)) {
    // One clique covers everything: Bob's states are pairwise orthogonal.
    const auto& all = includes_all(cert.v1, cert.v2) ? cert.v1 : cert.v2;
    cert.alice_basis = {Ket::Unit(2, 0), Ket::Unit(2, 1)};
    for (int j = 0; j < 2; ++j) {
      cert.bob_measurements[j] = bob_states(all);
      cert.bob_labels[j] = all;
    }
    return cert;
  }
  std::vector<std::size_t> only1;
  std::vector<std::size_t> only2;
  std::set_difference(cert.v1.begin(), cert.v1.end(), cert.v2.begin(), cert.v2.end(),
                      std::back_inserter(only1));
  std::set_difference(cert.v2.begin(), cert.v2.end(), cert.v1.begin(), cert.v1.end(),
                      std::back_inserter(only2));
  const Ket psi1 = s.states()[only1.front()].alice.normalized();
  Ket psi2(2);
  psi2 << -std::conj(psi1(1)), std::conj(psi1(0));
  cert.alice_basis = {psi1, psi2};
  cert.bob_measurements = {bob_states(cert.v1), bob_states(cert.v2)};
  cert.bob_labels = {cert.v1, cert.v2};
  return cert;
}

}  // namespace

QubitSenderDecision decide_qubit_sender(const ProductStateSet& s, Tolerance tol) {
  if (s.dim_a() != 2) {
    throw LoccError(ErrorCode::kBadDimension, "single-qubit sender requires dim(A) = 2");
  }
  const Graph g_a = alice_graph(s, tol);
  const Graph g_b = bob_graph(s, tol);
  require_orthogonal_products(g_a, g_b);
  QubitSenderDecision out;
  auto parts = find_two_clique_sandwich(g_a, g_b);
  if (!parts) {
    out.decision = Decision::kIndistinguishable;
    return out;
  }
  out.decision = Decision::kDistinguishable;
  out.certificate = build_certificate(s, std::move(parts->first), std::move(parts->second), tol);
  return out;
}

OneWayProtocol extract_qubit_protocol(const ProductStateSet& s, const QubitSenderCertificate& cert,
                                      Tolerance tol) {
  auto invalid = [](const std::string& why) {
    return LoccError(ErrorCode::kInvalidCertificate, why);
  };
  if (s.dim_a() != 2) throw invalid("single-qubit sender requires dim(A) = 2");
  const std::size_t n = s.size();
  const Graph g_a = alice_graph(s, tol);
  const Graph g_b = bob_graph(s, tol);
  std::vector<char> in1(n, 0);
  std::vector<char> in2(n, 0);
  for (const std::size_t v : cert.v1) {
    if (v >= n) throw invalid("vertex out of range");
    in1[v] = 1;
  }
  for (const std::size_t v : cert.v2) {
    if (v >= n) throw invalid("vertex out of range");
    in2[v] = 1;
  }
  for (std::size_t u = 0; u < n; ++u) {
    if (!in1[u] && !in2[u]) throw invalid("V1 u V2 misses vertex " + std::to_string(u));
    for (std::size_t v = u + 1; v < n; ++v) {
      const bool share = (in1[u] && in1[v]) || (in2[u] && in2[v]);
      if (g_a.adjacent(u, v) && !share) throw invalid("an edge of G_A is split between V1 and V2");
      if (g_b.adjacent(u, v) && share) throw invalid("V1 or V2 is not independent in G_B");
    }
  }
  const Ket& a0 = cert.alice_basis[0];
  const Ket& a1 = cert.alice_basis[1];
  if (a0.size() != 2 || a1.size() != 2 || std::abs(a0.norm() - 1.0) > tol.abs ||
      std::abs(a1.norm() - 1.0) > tol.abs || std::abs(a0.dot(a1)) > tol.abs) {
    throw invalid("Alice's basis is not orthonormal");
  }

  OneWayProtocol protocol;
  for (int j = 0; j < 2; ++j) {
    const Ket& a = cert.alice_basis[j];
    protocol.alice.push_back(outer(a, a));
    const auto& kets = cert.bob_measurements[j];
    const auto& labels = cert.bob_labels[j];
    if (kets.size() != labels.size()) throw invalid("Bob's states and labels differ in count");
    // Every state that can produce Alice outcome j must be measured by Bob.
    std::vector<char> listed(n, 0);
    for (const std::size_t v : labels) {
      if (v >= n) throw invalid("label out of range");
      listed[v] = 1;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (!listed[v] && std::abs(a.dot(s.states()[v].alice)) > tol.abs) {
        throw invalid("state " + std::to_string(v) + " can reach outcome " + std::to_string(j) +
                      " but Bob does not test for it");
      }
    }
    const auto d_b = static_cast<Eigen::Index>(s.dim_b());
    ComplexMatrix rest = ComplexMatrix::Identity(d_b, d_b);
    std::vector<ComplexMatrix> bob;
    std::vector<long> outcome_labels;
    for (std::size_t i = 0; i < kets.size(); ++i) {
      if (kets[i].size() != d_b) throw invalid("Bob's state has the wrong dimension");
      const ComplexMatrix p = outer(kets[i], kets[i]);
      bob.push_back(p);
      outcome_labels.push_back(static_cast<long>(labels[i]));
      rest -= p;
    }
    if (rest.trace().real() > 0.5) {
      bob.push_back(rest);
      outcome_labels.push_back(-1);
    }
    protocol.bob.push_back(std::move(bob));
    protocol.labels.push_back(std::move(outcome_labels));
  }
  return protocol;
}

}  // namespace locc
