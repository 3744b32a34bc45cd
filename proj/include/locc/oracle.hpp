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

// Independent, slower checks used to validate the main criteria. Oracles
// never feed back into a decision; disagreement with a criterion-based
// verdict indicates a bug.

#include <cstdint>
#include <optional>
#include <string>

#include "locc/graphs.hpp"
#include "locc/operator_algebra.hpp"
#include "locc/pauli.hpp"
#include "locc/states.hpp"

namespace locc {

enum class OracleMethod {
  kSandwichEnumeration,
  kRandomizedSeparating,
  kDensePauliGram,
  kProtocolSimulation,
};

struct OracleReport {
  std::optional<bool> verdict;  // nullopt: inconclusive
  OracleMethod method = OracleMethod::kRandomizedSeparating;
  int trials = 0;
  std::uint64_t seed = kDefaultSeed;
  std::string note;
};

/// Enumeration bound on |E(complement(G_B))| - |E(G_A)|.
inline constexpr std::size_t kMaxSandwichFreeEdges = 24;

/// Tries every graph G_A <= G <= gb_bar and tests cc(G) <= 2 directly.
bool sandwich_enumerate(const Graph& g_a, const Graph& gb_bar);

/// One-sided: true as soon as a sampled vector separates the algebra.
OracleReport randomized_separating_oracle(const OperatorSystem& a, int trials,
                                          std::uint64_t seed = kDefaultSeed);

/// Rank of the Gram matrix of the dense elements of <ops>, generated by
/// dense multiplication (n <= 5).
std::size_t dense_pauli_oracle(const PauliSet& ops);

struct SimulationReport {
  bool success = false;
  double worst_error = 0.0;  // largest misidentification probability
  std::size_t worst_state = 0;
};

/// Born-rule simulation of every (state, Alice outcome, Bob outcome) branch.
SimulationReport simulate_one_way_protocol_report(const StateSet& states,
                                                  const OneWayProtocol& protocol,
                                                  Tolerance tol = {});
bool simulate_one_way_protocol(const StateSet& states, const OneWayProtocol& protocol,
                               Tolerance tol = {});

}  // namespace locc
