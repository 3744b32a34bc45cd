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

#include <cmath>
#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "locc/graphs.hpp"
#include "locc/oracle.hpp"
#include "oracle_util.hpp"
#include "product_corpus.hpp"

namespace locc {
namespace {

using testing::brute_clique_cover;

Ket ket(std::initializer_list<Complex> xs) {
  Ket k(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto x : xs) k(i++) = x;
  return k;
}

const double kH = 1.0 / std::sqrt(2.0);

std::vector<std::vector<bool>> adjacency(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
  return adj;
}

Graph graph_from_mask(std::size_t n, std::uint32_t mask) {
  Graph g(n);
  std::uint32_t bit = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v, ++bit) {
      if (mask >> bit & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph cycle(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

// Alice and Bob kets of the three-dimensional example with G_A = C_4.
ProductStateSet c3_example() {
  return ProductStateSet(3, 2,
                         {{ket({1, 1, 0}), ket({1, 0})},
                          {ket({1, 0, 1}), ket({0, 1})},
                          {ket({1, -1, 0}), ket({1, 0})},
                          {ket({1, 0, -1}), ket({0, 1})}});
}

// Five states in C^2 (x) C^3 with no two-clique sandwich.
ProductStateSet final_example() {
  return ProductStateSet(2, 3,
                         {{ket({0, 1}), ket({0, 1, 0})},
                          {ket({1, 0}), ket({1, 1, 0})},
                          {ket({1, 0}), ket({1, -1, 0})},
                          {ket({1, 1}), ket({0, 0, 1})},
                          {ket({1, -1}), ket({0, 0, 1})}});
}

ProductStateSet plus_minus_example() {
  return ProductStateSet(2, 2,
                         {{ket({1, 0}), ket({1, 0})},
                          {ket({1, 0}), ket({0, 1})},
                          {ket({0, 1}), ket({kH, kH})},
                          {ket({0, 1}), ket({kH, -kH})}});
}

ProductStateSet standard_basis() {
  return ProductStateSet(2, 2,
                         {{ket({1, 0}), ket({1, 0})},
                          {ket({1, 0}), ket({0, 1})},
                          {ket({0, 1}), ket({1, 0})},
                          {ket({0, 1}), ket({0, 1})}});
}

TEST(GraphBasics, EdgesDegreeAndErrors) {
  Graph g = Graph::from_edges(4, {{2, 0}, {1, 3}});
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 2}, {1, 3}}));
  EXPECT_TRUE(g.adjacent(0, 2));
  EXPECT_TRUE(g.adjacent(2, 0));
  EXPECT_EQ(g.degree(0), 1u);
  g.remove_edge(0, 2);
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_THROW(g.add_edge(1, 1), LoccError);
  EXPECT_THROW(g.add_edge(0, 4), LoccError);
}

TEST(GraphFromVectors, ExampleAliceKetsGiveFourCycle) {
  const Graph g = alice_graph(c3_example());
  EXPECT_EQ(g, cycle(4));
  EXPECT_EQ(complement(bob_graph(c3_example())), cycle(4));
}

TEST(GraphFromVectors, OrthonormalBasisIsEmpty) {
  std::vector<Ket> kets;
  for (int k = 0; k < 5; ++k) kets.push_back(Ket::Unit(5, k));
  EXPECT_EQ(graph_from_vectors(kets).edge_count(), 0u);
}

TEST(GraphFromVectors, EqualKetsAreComplete) {
  const std::vector<Ket> kets(5, ket({1, 2, 3}));
  EXPECT_EQ(graph_from_vectors(kets), Graph::complete(5));
}

TEST(GraphFromVectors, ZeroVectorThrows) {
  try {
    graph_from_vectors({ket({1, 0}), ket({0, 0})});
    FAIL();
  } catch (const LoccError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroVector);
  }
}

TEST(GraphFromVectors, BorderlinePairsReported) {
  const std::vector<Ket> kets{ket({1, 0}), ket({1e-9, 1}), ket({kH, kH})};
  const auto pairs = borderline_pairs(kets);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0], (Edge{0, 1}));
}

TEST(GraphFromVectors, OrthogonalRepresentationRoundTrip) {
  std::mt19937_64 rng(kDefaultSeed);
  for (std::size_t n = 2; n <= 6; ++n) {
    Graph path(n);
    for (std::size_t v = 0; v + 1 < n; ++v) path.add_edge(v, v + 1);
    std::vector<Graph> graphs{path};
    if (n >= 3) graphs.push_back(cycle(n));
    for (const auto& g : graphs) {
      std::uint32_t mask = 0;
      for (const auto& [u, v] : g.edges()) mask |= testing::edge_bit(n, u, v);
      const auto kets = testing::random_orthogonal_representation(n, mask, rng);
      EXPECT_EQ(graph_from_vectors(kets), g) << "n=" << n;
    }
  }
}

TEST(Complement, InvolutionOnRandomGraphs) {
  std::mt19937_64 rng(kDefaultSeed);
  for (int t = 0; t < 100; ++t) {
    const Graph g = random_graph(1 + t % 9, 0.5, rng);
    EXPECT_EQ(complement(complement(g)), g);
    EXPECT_EQ(g.edge_count() + complement(g).edge_count(),
              g.vertex_count() * (g.vertex_count() - 1) / 2);
  }
}

TEST(Complement, SubgraphAndMismatch) {
  const Graph c4 = cycle(4);
  EXPECT_TRUE(is_subgraph(c4, Graph::complete(4)));
  EXPECT_FALSE(is_subgraph(Graph::complete(4), c4));
  EXPECT_TRUE(is_subgraph(Graph(4), c4));
  try {
    is_subgraph(c4, Graph(5));
    FAIL();
  } catch (const LoccError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kVertexCountMismatch);
  }
}

TEST(CliqueCover, FourCycleEdgeCover) {
  const Graph c4 = cycle(4);
  EXPECT_TRUE(is_clique_cover(c4, {{{0, 1}, {1, 2}, {2, 3}, {3, 0}}}));
  EXPECT_FALSE(is_clique_cover(c4, {{{0, 1, 2}}}));
  EXPECT_FALSE(is_clique_cover(c4, {{{0, 1}, {1, 2}, {2, 3}}}));
  EXPECT_EQ(clique_cover_number(c4), 4u);
}

TEST(CliqueCover, FinalExampleComplementOfBob) {
  const Graph gb_bar = complement(bob_graph(final_example()));
  const CliqueCover expected{{{0, 4}, {0, 3}, {1, 2, 3}, {1, 2, 4}}};
  EXPECT_TRUE(is_clique_cover(gb_bar, expected));
  EXPECT_EQ(clique_cover_number(gb_bar), 4u);
  EXPECT_TRUE(is_clique_cover(gb_bar, minimum_clique_cover(gb_bar)));
}

TEST(CliqueCover, CompleteAndEmpty) {
  for (std::size_t r = 1; r <= 8; ++r) {
    EXPECT_EQ(clique_cover_number(Graph::complete(r)), 1u);
    EXPECT_EQ(clique_cover_number(Graph(r)), r);
  }
  EXPECT_EQ(clique_cover_number(Graph(0)), 0u);
}

TEST(CliqueCover, TooLarge) {
  try {
    clique_cover_number(Graph(kMaxCliqueCoverVertices + 1));
    FAIL();
  } catch (const LoccError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
  EXPECT_EQ(clique_cover_number(cycle(kMaxCliqueCoverVertices)), kMaxCliqueCoverVertices);
}

TEST(CliqueCover, ExhaustiveAgainstBruteForceUpToFiveVertices) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::uint32_t pairs = static_cast<std::uint32_t>(n * (n - 1) / 2);
    for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
      const Graph g = graph_from_mask(n, mask);
      const auto cover = minimum_clique_cover(g);
      const int expected = brute_clique_cover(static_cast<int>(n), adjacency(g));
      ASSERT_EQ(static_cast<int>(cover.size()), expected) << "n=" << n << " mask=" << mask;
      ASSERT_TRUE(is_clique_cover(g, cover));
      // cc <= 2 iff a two-part cover exists.
      ASSERT_EQ(find_clique_cover(g, 2).has_value(), expected <= 2);
    }
  }
}

TEST(CliqueCover, RandomSixAndSevenVertexGraphs) {
  std::mt19937_64 rng(kDefaultSeed);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 6 + t % 2;
    const Graph g = random_graph(n, 0.3 + 0.4 * (t % 3) / 2.0, rng);
    EXPECT_EQ(static_cast<int>(clique_cover_number(g)),
              brute_clique_cover(static_cast<int>(n), adjacency(g)));
  }
}

TEST(CliqueCover, FindWithBudget) {
  const Graph c4 = cycle(4);
  EXPECT_FALSE(find_clique_cover(c4, 3).has_value());
  const auto cover = find_clique_cover(c4, 4);
  ASSERT_TRUE(cover.has_value());
  EXPECT_TRUE(is_clique_cover(c4, *cover));
}

TEST(ProductOrthogonality, MatchesGraphContainment) {
  std::mt19937_64 rng(kDefaultSeed);
  const auto rays = testing::qubit_rays();
  std::uniform_int_distribution<int> pick(0, 5);
  std::uniform_int_distribution<std::size_t> size(2, 6);
  int orthogonal = 0;
  for (int t = 0; t < 200; ++t) {
    std::vector<ProductState> ps;
    const std::size_t r = size(rng);
    for (std::size_t v = 0; v < r; ++v) ps.push_back({rays[pick(rng)], rays[pick(rng)]});
    const ProductStateSet s(2, 2, ps);
    bool all_orthogonal = true;
    for (std::size_t u = 0; u < r; ++u) {
      for (std::size_t v = u + 1; v < r; ++v) {
        const Ket x = testing::kron(ps[u].alice, ps[u].bob);
        const Ket y = testing::kron(ps[v].alice, ps[v].bob);
        all_orthogonal = all_orthogonal && std::abs(x.dot(y)) < 1e-9;
      }
    }
    orthogonal += all_orthogonal ? 1 : 0;
    EXPECT_EQ(all_orthogonal, is_subgraph(alice_graph(s), complement(bob_graph(s))));
  }
  EXPECT_GT(orthogonal, 0);
}

TEST(VerifyProductProtocol, ThreeDimensionalExample) {
  const ProductStateSet s = c3_example();
  const Graph g = alice_graph(s);
  const CliqueCover cover{{{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
  // Q_j = |psi_j><psi_j| / 4 with psi_j orthogonal to the Alice kets outside V_j.
  const Ket psi[4] = {ket({1, 1, 1}), ket({1, -1, 1}), ket({1, -1, -1}), ket({1, 1, -1})};
  Povm povm;
  for (const auto& p : psi) povm.elements.push_back(0.25 * outer(p, p));
  EXPECT_TRUE(validate_povm(povm));
  EXPECT_TRUE(verify_product_protocol(s, g, cover, povm));
  EXPECT_EQ(clique_cover_number(g), 4u);
}

TEST(VerifyProductProtocol, StandardBasisTwoEdges) {
  const ProductStateSet s = standard_basis();
  const Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
  const CliqueCover cover{{{0, 1}, {2, 3}}};
  const Povm projective{{outer(ket({1, 0}), ket({1, 0})), outer(ket({0, 1}), ket({0, 1}))}, {}};
  EXPECT_TRUE(verify_product_protocol(s, g, cover, projective));
  const Povm trivial{{ComplexMatrix::Identity(2, 2)}, {}};
  EXPECT_FALSE(verify_product_protocol(s, g, cover, trivial));
  const Povm halves{{0.5 * ComplexMatrix::Identity(2, 2), 0.5 * ComplexMatrix::Identity(2, 2)}, {}};
  EXPECT_FALSE(verify_product_protocol(s, g, cover, halves));
  // G outside the sandwich.
  EXPECT_FALSE(verify_product_protocol(s, Graph::complete(4), {{{0, 1, 2, 3}}},
                                       Povm{{ComplexMatrix::Identity(2, 2)}, {}}));
}

TEST(VerifyProductProtocol, Errors) {
  const ProductStateSet s = standard_basis();
  const Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
  const CliqueCover cover{{{0, 1}, {2, 3}}};
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const LoccError& e) {
      return e.code();
    }
    return ErrorCode::kNumerical;
  };
  const Povm bad{{outer(ket({1, 0}), ket({1, 0}))}, {}};
  EXPECT_EQ(code_of([&] { verify_product_protocol(s, g, cover, bad); }), ErrorCode::kInvalidPovm);
  const ProductStateSet flat(2, 2, {{ket({1, 0}), ket({1, 0})}, {ket({1, 0}), ket({0, 1})}});
  EXPECT_EQ(code_of([&] {
              verify_product_protocol(flat, Graph::complete(2), {{{0, 1}}},
                                      Povm{{ComplexMatrix::Identity(2, 2)}, {}});
            }),
            ErrorCode::kNotSpanning);
  const ProductStateSet overlap(2, 2, {{ket({1, 0}), ket({1, 0})}, {ket({0, 1}), ket({1, 0})},
                                       {ket({kH, kH}), ket({kH, kH})}});
  EXPECT_EQ(code_of([&] {
              verify_product_protocol(overlap, Graph(3), {{{0}, {1}, {2}}},
                                      Povm{{ComplexMatrix::Identity(2, 2)}, {}});
            }),
            ErrorCode::kNotOrthogonalStates);
}

TEST(QubitSender, PlusMinusExampleIsDistinguishable) {
  const ProductStateSet s = plus_minus_example();
  const auto d = decide_qubit_sender(s);
  ASSERT_EQ(d.decision, Decision::kDistinguishable);
  ASSERT_TRUE(d.certificate.has_value());
  const auto& c = *d.certificate;
  EXPECT_EQ(c.v1, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(c.v2, (std::vector<std::size_t>{2, 3}));
  // Alice measures in the standard basis up to phases.
  EXPECT_NEAR(std::abs(c.alice_basis[0](0)), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(c.alice_basis[1](1)), 1.0, 1e-12);
  // Bob measures {|0>,|1>} on one outcome and {|+>,|->} on the other.
  EXPECT_NEAR(std::abs(c.bob_measurements[0][0].dot(ket({1, 0}))), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(c.bob_measurements[0][1].dot(ket({0, 1}))), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(c.bob_measurements[1][0].dot(ket({kH, kH}))), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(c.bob_measurements[1][1].dot(ket({kH, -kH}))), 1.0, 1e-12);
  const auto protocol = extract_qubit_protocol(s, c);
  const auto report = simulate_one_way_protocol_report(state_set_from_products(s), protocol);
  EXPECT_TRUE(report.success);
  EXPECT_LT(report.worst_error, 1e-12);
}

TEST(QubitSender, StandardBasisIsDistinguishable) {
  const ProductStateSet s = standard_basis();
  EXPECT_EQ(clique_cover_number(alice_graph(s)), 2u);
  EXPECT_EQ(clique_cover_number(complement(bob_graph(s))), 4u);
  const auto d = decide_qubit_sender(s);
  ASSERT_EQ(d.decision, Decision::kDistinguishable);
  EXPECT_TRUE(simulate_one_way_protocol(state_set_from_products(s),
                                        extract_qubit_protocol(s, *d.certificate)));
}

TEST(QubitSender, FinalExampleIsNotDistinguishable) {
  const auto d = decide_qubit_sender(final_example());
  EXPECT_EQ(d.decision, Decision::kIndistinguishable);
  EXPECT_FALSE(d.certificate.has_value());
}

TEST(QubitSender, SingleStateIsTrivial) {
  const ProductStateSet s(2, 3, {{ket({1, 2}), ket({0, 1, 1})}});
  const auto d = decide_qubit_sender(s);
  ASSERT_EQ(d.decision, Decision::kDistinguishable);
  EXPECT_TRUE(simulate_one_way_protocol(state_set_from_products(s),
                                        extract_qubit_protocol(s, *d.certificate)));
}

TEST(QubitSender, NonSpanningAliceReducesToBob) {
  const ProductStateSet s(2, 3, {{ket({1, 1}), ket({1, 0, 0})},
                                 {ket({1, 1}), ket({0, 1, 0})},
                                 {ket({1, 1}), ket({0, 0, 1})}});
  const auto d = decide_qubit_sender(s);
  ASSERT_EQ(d.decision, Decision::kDistinguishable);
  EXPECT_TRUE(simulate_one_way_protocol(state_set_from_products(s),
                                        extract_qubit_protocol(s, *d.certificate)));
}

TEST(QubitSender, Errors) {
  try {
    decide_qubit_sender(c3_example());
    FAIL();
  } catch (const LoccError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadDimension);
  }
  const ProductStateSet overlap(2, 2, {{ket({1, 0}), ket({1, 0})}, {ket({kH, kH}), ket({1, 0})}});
  try {
    decide_qubit_sender(overlap);
    FAIL();
  } catch (const LoccError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotOrthogonalStates);
  }
}

TEST(QubitSender, TamperedCertificateRejected) {
  const ProductStateSet s = plus_minus_example();
  auto cert = *decide_qubit_sender(s).certificate;
  auto swapped = cert;
  std::swap(swapped.v1, swapped.v2);
  swapped.v1 = {0, 2};
  swapped.v2 = {1, 3};
  EXPECT_THROW(extract_qubit_protocol(s, swapped), LoccError);
  auto missing = cert;
  missing.v2 = {2};
  EXPECT_THROW(extract_qubit_protocol(s, missing), LoccError);
  auto skewed = cert;
  skewed.alice_basis[1] = ket({kH, kH});
  EXPECT_THROW(extract_qubit_protocol(s, skewed), LoccError);
}

TEST(QubitSender, SearchIsLexicographicallySmallest) {
  // Edgeless G_A and G_B: every vertex fits in V1 alone.
  const auto parts = find_two_clique_sandwich(Graph(3), Graph(3));
  ASSERT_TRUE(parts.has_value());
  EXPECT_EQ(parts->first, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_TRUE(parts->second.empty());
}

Eigen::MatrixXcd random_orthonormal(Eigen::Index d, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Eigen::MatrixXcd m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = {nd(rng), nd(rng)};
  }
  return Eigen::HouseholderQR<Eigen::MatrixXcd>(m).householderQ();
}

// Six states built from a known split: V1-only states use Alice ket psi1,
// V2-only use psi2, shared states use a third ray; Bob's kets come from two
// orthonormal bases of C^4 that agree on the shared vectors.
TEST(QubitSender, RandomSixStateInstancesSimulateExactly) {
  std::mt19937_64 rng(kDefaultSeed);
  const auto rays = testing::qubit_rays();
  const std::size_t splits[4][3] = {{0, 3, 3}, {0, 2, 4}, {1, 2, 3}, {2, 2, 2}};
  for (int t = 0; t < 50; ++t) {
    const auto& [m, a, b] = splits[t % 4];
    const int pair = t % 3;
    const Ket psi1 = rays[2 * pair];
    const Ket psi2 = rays[2 * pair + 1];
    const Ket shared = rays[2 * ((pair + 1) % 3)];
    const Eigen::MatrixXcd q = random_orthonormal(4, rng);
    Eigen::MatrixXcd b1 = q;
    Eigen::MatrixXcd b2 = q;
    const auto rest = static_cast<Eigen::Index>(4 - m);
    b2.rightCols(rest) = q.rightCols(rest) * random_orthonormal(rest, rng);
    std::vector<ProductState> ps;
    for (std::size_t i = 0; i < m; ++i) ps.push_back({shared, b1.col(i)});
    for (std::size_t i = 0; i < a; ++i) ps.push_back({psi1, b1.col(m + i)});
    for (std::size_t i = 0; i < b; ++i) ps.push_back({psi2, b2.col(m + i)});
    std::shuffle(ps.begin(), ps.end(), rng);
    const ProductStateSet s(2, 4, ps);
    const auto d = decide_qubit_sender(s);
    ASSERT_EQ(d.decision, Decision::kDistinguishable) << "t=" << t;
    const auto report = simulate_one_way_protocol_report(state_set_from_products(s),
                                                         extract_qubit_protocol(s, *d.certificate));
    EXPECT_TRUE(report.success) << "t=" << t;
    EXPECT_LT(report.worst_error, 1e-12);
  }
}

}  // namespace
}  // namespace locc
