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

#include "locc/states.hpp"

#include <string>

namespace locc {

ProductStateSet::ProductStateSet(std::size_t dim_a, std::size_t dim_b,
                                 std::vector<ProductState> states)
    : dim_a_(dim_a), dim_b_(dim_b), states_(std::move(states)) {
  if (dim_a_ == 0 || dim_b_ == 0) {
    throw LoccError(ErrorCode::kBadDimension, "local dimensions must be positive");
  }
  for (std::size_t k = 0; k < states_.size(); ++k) {
    auto& s = states_[k];
    if (static_cast<std::size_t>(s.alice.size()) != dim_a_ ||
        static_cast<std::size_t>(s.bob.size()) != dim_b_) {
      throw LoccError(ErrorCode::kDimensionMismatch,
                      "product state " + std::to_string(k) + " has the wrong local dimension");
    }
    if (s.alice.norm() == 0.0 || s.bob.norm() == 0.0) {
      throw LoccError(ErrorCode::kZeroVector,
                      "product state " + std::to_string(k) + " has a zero factor");
    }
    s.alice.normalize();
    s.bob.normalize();
  }
}

std::vector<Ket> ProductStateSet::alice_kets() const {
  std::vector<Ket> out;
  out.reserve(states_.size());
  for (const auto& s : states_) out.push_back(s.alice);
  return out;
}

std::vector<Ket> ProductStateSet::bob_kets() const {
  std::vector<Ket> out;
  out.reserve(states_.size());
  for (const auto& s : states_) out.push_back(s.bob);
  return out;
}

StateSet state_set_from_unitaries(std::span<const ComplexMatrix> unitaries, Tolerance tol) {
  StateSet set;
  if (unitaries.empty()) return set;
  const auto d = static_cast<std::size_t>(unitaries.front().rows());
  set.dim_a = d;
  set.dim_b = d;
  for (const auto& u : unitaries) {
    if (static_cast<std::size_t>(u.rows()) != d) {
      throw LoccError(ErrorCode::kDimensionMismatch, "unitaries differ in dimension");
    }
    set.kets.push_back(max_entangled(u, tol));
  }
  return set;
}

StateSet state_set_from_products(const ProductStateSet& s) {
  StateSet set{s.dim_a(), s.dim_b(), {}};
  for (const auto& p : s.states()) set.kets.push_back(kron_ket(p.alice, p.bob));
  return set;
}

}  // namespace locc
