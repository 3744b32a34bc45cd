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

#include <cstddef>
#include <span>
#include <vector>

#include "locc/linalg.hpp"

namespace locc {

/// A finite set of pure states on C^dA (x) C^dB.
struct StateSet {
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  std::vector<Ket> kets;
};

struct ProductState {
  Ket alice;
  Ket bob;
};

/// Product states |a_k> (x) |b_k>; kets are stored normalized.
class ProductStateSet {
 public:
  ProductStateSet(std::size_t dim_a, std::size_t dim_b,
                  std::vector<ProductState> states);

  std::size_t dim_a() const noexcept { return dim_a_; }
  std::size_t dim_b() const noexcept { return dim_b_; }
  std::size_t size() const noexcept { return states_.size(); }
  const std::vector<ProductState>& states() const noexcept { return states_; }
  std::vector<Ket> alice_kets() const;
  std::vector<Ket> bob_kets() const;

 private:
  std::size_t dim_a_;
  std::size_t dim_b_;
  std::vector<ProductState> states_;
};

/// One-way LOCC measurement {A_k (x) B_{k,j}} with Alice going first.
/// labels[k][j] names the state index concluded on outcome (k, j), or -1.
/// Empty labels mean "infer from the outcome statistics".
struct OneWayProtocol {
  std::vector<ComplexMatrix> alice;
  std::vector<std::vector<ComplexMatrix>> bob;
  std::vector<std::vector<long>> labels;
};

StateSet state_set_from_unitaries(std::span<const ComplexMatrix> unitaries,
                                  Tolerance tol = {});
StateSet state_set_from_products(const ProductStateSet& s);

}  // namespace locc
