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

// JSON file formats (schema "locc/1") for state sets, graphs and protocols.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "locc/graphs.hpp"
#include "locc/linalg.hpp"
#include "locc/states.hpp"

namespace locc::io {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "locc/1";

enum class StateKind { kMaxEntangled, kPauliLabels, kPermutations, kProduct };

std::string_view state_kind_name(StateKind kind);

struct StateSetFile {
  StateKind kind = StateKind::kMaxEntangled;
  /// The unitaries U_i of the states (I (x) U_i)|Phi>; empty for product sets.
  std::vector<ComplexMatrix> unitaries;
  std::vector<std::string> labels;               // pauli_labels
  std::vector<std::vector<std::size_t>> perms;   // permutations, image form
  std::optional<ProductStateSet> product;

  bool is_product() const noexcept { return kind == StateKind::kProduct; }
  StateSet state_set(Tolerance tol = {}) const;
};

/// Reads a JSON document; syntax errors report line and column.
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

StateSetFile parse_state_file(const Json& j);
StateSetFile load_state_file(const std::filesystem::path& path);
Json to_json(const StateSetFile& f);

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j, const std::string& where);
Json ket_to_json(const Ket& v);
Ket ket_from_json(const Json& j, const std::string& where);
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j, const std::string& where);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j, const std::string& where);
Json cover_to_json(const CliqueCover& c);
CliqueCover cover_from_json(const Json& j, const std::string& where);

Json protocol_to_json(const OneWayProtocol& p);
OneWayProtocol protocol_from_json(const Json& j, const std::string& where);

}  // namespace locc::io
