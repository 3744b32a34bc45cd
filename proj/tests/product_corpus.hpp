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

// Exhaustive corpus of product-state sets with Alice in C^2 and at most
// five states. Alice's kets come from six rays forming three orthogonal
// pairs; Bob's kets are random orthogonal representations of every graph
// G_B contained in the complement of G_A.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "locc/states.hpp"

namespace locc::testing {

struct CorpusInstance {
  std::size_t r = 0;
  std::uint32_t alice_edges = 0;  // bit (u * r + v) for u < v
  std::uint32_t bob_edges = 0;
  ProductStateSet states;
};

inline std::uint32_t edge_bit(std::size_t r, std::size_t u, std::size_t v) {
  return 1U << (u * r + v);
}

inline std::vector<Eigen::VectorXcd> qubit_rays() {
  const double h = 1.0 / std::sqrt(2.0);
  const std::complex<double> i(0.0, 1.0);
  std::vector<Eigen::VectorXcd> rays(6, Eigen::VectorXcd(2));
  rays[0] << 1.0, 0.0;
  rays[1] << 0.0, 1.0;
  rays[2] << h, h;
  rays[3] << h, -h;
  rays[4] << h, h * i;
  rays[5] << h, -h * i;
  return rays;
}

/// Vectors in C^r with <v_u, v_v> = 0 exactly for non-edges u != v.
inline std::vector<Eigen::VectorXcd> random_orthogonal_representation(std::size_t r,
                                                                      std::uint32_t edges,
                                                                      std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  const auto d = static_cast<Eigen::Index>(r);
  std::vector<Eigen::VectorXcd> out;
  for (std::size_t v = 0; v < r; ++v) {
    Eigen::VectorXcd x(d);
    for (Eigen::Index k = 0; k < d; ++k) x(k) = {nd(rng), nd(rng)};
    std::vector<Eigen::VectorXcd> avoid;
    for (std::size_t u = 0; u < v; ++u) {
      if (!(edges & edge_bit(r, u, v))) avoid.push_back(out[u]);
    }
    // Gram-Schmidt against the vectors that must stay orthogonal.
    std::vector<Eigen::VectorXcd> q;
    for (auto a : avoid) {
      for (const auto& b : q) a -= b * b.dot(a);
      if (a.norm() > 1e-12) q.push_back(a.normalized());
    }
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : q) x -= b * b.dot(x);
    }
    out.push_back(x.normalized());
  }
  return out;
}

/// Every labeled (G_A, G_B) pair with r <= max_r vertices realizable by the
/// ray set, one product-state instance each.
inline std::vector<CorpusInstance> product_corpus(std::size_t max_r, std::uint64_t seed) {
  const auto rays = qubit_rays();
  std::mt19937_64 rng(seed);
  std::vector<CorpusInstance> out;
  for (std::size_t r = 1; r <= max_r; ++r) {
    std::set<std::uint32_t> seen;
    std::vector<int> assign(r, 0);
    while (true) {
      std::uint32_t ga = 0;
      std::uint32_t free_edges = 0;
      for (std::size_t u = 0; u < r; ++u) {
        for (std::size_t v = u + 1; v < r; ++v) {
          if (std::abs(rays[assign[u]].dot(rays[assign[v]])) > 1e-9) {
            ga |= edge_bit(r, u, v);
          } else {
            free_edges |= edge_bit(r, u, v);
          }
        }
      }
      if (seen.insert(ga).second) {
        // Enumerate all subsets of the complement of G_A as G_B.
        std::uint32_t sub = free_edges;
        while (true) {
          const auto bob = random_orthogonal_representation(r, sub, rng);
          std::vector<ProductState> ps;
          for (std::size_t v = 0; v < r; ++v) ps.push_back({rays[assign[v]], bob[v]});
          out.push_back({r, ga, sub, ProductStateSet(2, r, std::move(ps))});
          if (sub == 0) break;
          sub = (sub - 1) & free_edges;
        }
      }
      std::size_t pos = 0;
      while (pos < r && assign[pos] == 5) assign[pos++] = 0;
      if (pos == r) break;
      ++assign[pos];
    }
  }
  return out;
}

}  // namespace locc::testing
