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

#include "locc/io.hpp"

#include <fstream>
#include <sstream>

#include "locc/pauli.hpp"

namespace locc::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw LoccError(ErrorCode::kParseError, where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t size_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    fail(where + "." + key, "expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

void check_schema(const Json& j) {
  if (!j.is_object()) fail("$", "expected a JSON object");
  const auto it = j.find("schema");
  if (it != j.end() && (!it->is_string() || it->get<std::string>() != kSchema)) {
    fail("$.schema", std::string("unsupported schema (expected \"") + kSchema + "\")");
  }
}

std::string index_path(const std::string& where, std::size_t i) {
  return where + "[" + std::to_string(i) + "]";
}

std::pair<std::size_t, std::size_t> line_and_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

std::string_view state_kind_name(StateKind kind) {
  switch (kind) {
    case StateKind::kMaxEntangled: return "max_entangled";
    case StateKind::kPauliLabels: return "pauli_labels";
    case StateKind::kPermutations: return "permutations";
    case StateKind::kProduct: return "product";
  }
  return "unknown";
}

StateSet StateSetFile::state_set(Tolerance tol) const {
  if (product) return state_set_from_products(*product);
  return state_set_from_unitaries(unitaries, tol);
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoccError(ErrorCode::kParseError, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto [line, col] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw LoccError(ErrorCode::kParseError, path.string() + ":" + std::to_string(line) + ":" +
                                                std::to_string(col) + ": invalid JSON");
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw LoccError(ErrorCode::kParseError, "cannot write " + path.string());
  out << j.dump(2) << "\n";
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  fail(where, "expected a number or a [re, im] pair");
}

Json ket_to_json(const Ket& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

Ket ket_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a nonempty array of amplitudes");
  Ket v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i], index_path(where, i));
  }
  return v;
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

ComplexMatrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a nonempty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) fail(index_path(where, 0), "expected a nonempty row");
  const std::size_t cols = j[0].size();
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_path = index_path(where, r);
    if (!j[r].is_array() || j[r].size() != cols) fail(row_path, "rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          complex_from_json(j[r][c], index_path(row_path, c));
    }
  }
  return m;
}

StateSetFile parse_state_file(const Json& j) {
  check_schema(j);
  const Json& kind = field(j, "kind", "$");
  if (!kind.is_string()) fail("$.kind", "expected a string");
  const std::string k = kind.get<std::string>();
  StateSetFile f;
  if (k == "max_entangled") {
    f.kind = StateKind::kMaxEntangled;
    const std::size_t d = size_field(j, "d", "$");
    const Json& us = field(j, "unitaries", "$");
    if (!us.is_array() || us.empty()) fail("$.unitaries", "expected a nonempty array");
    for (std::size_t i = 0; i < us.size(); ++i) {
      const std::string where = index_path("$.unitaries", i);
      ComplexMatrix u = matrix_from_json(us[i], where);
      if (static_cast<std::size_t>(u.rows()) != d || static_cast<std::size_t>(u.cols()) != d) {
        fail(where, "expected a " + std::to_string(d) + "x" + std::to_string(d) + " matrix");
      }
      f.unitaries.push_back(std::move(u));
    }
  } else if (k == "pauli_labels") {
    f.kind = StateKind::kPauliLabels;
    const std::size_t n = size_field(j, "n", "$");
    if (n < 1 || n > 12) fail("$.n", "qubit count must be in [1, 12]");
    const Json& labels = field(j, "labels", "$");
    if (!labels.is_array() || labels.empty()) fail("$.labels", "expected a nonempty array");
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const std::string where = index_path("$.labels", i);
      if (!labels[i].is_string()) fail(where, "expected a string");
      const std::string label = labels[i].get<std::string>();
      PauliOp op;
      try {
        op = from_label(label);
      } catch (const LoccError& e) {
        fail(where, e.message());
      }
      if (static_cast<std::size_t>(op.num_qubits()) != n) {
        fail(where, "label length differs from n = " + std::to_string(n));
      }
      f.labels.push_back(label);
      f.unitaries.push_back(to_dense(op));
    }
  } else if (k == "permutations") {
    f.kind = StateKind::kPermutations;
    const std::size_t d = size_field(j, "d", "$");
    const Json& perms = field(j, "perms", "$");
    if (!perms.is_array() || perms.empty()) fail("$.perms", "expected a nonempty array");
    for (std::size_t i = 0; i < perms.size(); ++i) {
      const std::string where = index_path("$.perms", i);
      if (!perms[i].is_array() || perms[i].size() != d) {
        fail(where, "expected " + std::to_string(d) + " images");
      }
      std::vector<std::size_t> sigma;
      std::vector<char> seen(d, 0);
      for (std::size_t c = 0; c < d; ++c) {
        const Json& img = perms[i][c];
        if (!img.is_number_integer() || img.get<long long>() < 0 ||
            img.get<std::size_t>() >= d || seen[img.get<std::size_t>()]) {
          fail(index_path(where, c), "not a permutation of 0.." + std::to_string(d - 1));
        }
        seen[img.get<std::size_t>()] = 1;
        sigma.push_back(img.get<std::size_t>());
      }
      ComplexMatrix p = ComplexMatrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
      for (std::size_t c = 0; c < d; ++c) {
        p(static_cast<Eigen::Index>(sigma[c]), static_cast<Eigen::Index>(c)) = 1.0;
      }
      f.perms.push_back(std::move(sigma));
      f.unitaries.push_back(std::move(p));
    }
  } else if (k == "product") {
    f.kind = StateKind::kProduct;
    const std::size_t da = size_field(j, "dA", "$");
    const std::size_t db = size_field(j, "dB", "$");
    const Json& states = field(j, "states", "$");
    if (!states.is_array() || states.empty()) fail("$.states", "expected a nonempty array");
    std::vector<ProductState> pairs;
    for (std::size_t i = 0; i < states.size(); ++i) {
      const std::string where = index_path("$.states", i);
      Ket a = ket_from_json(field(states[i], "a", where), where + ".a");
      Ket b = ket_from_json(field(states[i], "b", where), where + ".b");
      if (static_cast<std::size_t>(a.size()) != da) fail(where + ".a", "length differs from dA");
      if (static_cast<std::size_t>(b.size()) != db) fail(where + ".b", "length differs from dB");
      if (a.norm() == 0.0) fail(where + ".a", "zero vector");
      if (b.norm() == 0.0) fail(where + ".b", "zero vector");
      pairs.push_back({std::move(a), std::move(b)});
    }
    f.product.emplace(da, db, std::move(pairs));
  } else {
    fail("$.kind", "unknown state-set kind \"" + k + "\"");
  }
  return f;
}

StateSetFile load_state_file(const std::filesystem::path& path) {
  const Json j = read_json_file(path);
  try {
    return parse_state_file(j);
  } catch (const LoccError& e) {
    throw LoccError(e.code(), path.string() + ": " + e.message());
  }
}

Json to_json(const StateSetFile& f) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = std::string(state_kind_name(f.kind));
  switch (f.kind) {
    case StateKind::kMaxEntangled: {
      j["d"] = f.unitaries.empty() ? 0 : f.unitaries.front().rows();
      Json us = Json::array();
      for (const auto& u : f.unitaries) us.push_back(matrix_to_json(u));
      j["unitaries"] = std::move(us);
      break;
    }
    case StateKind::kPauliLabels:
      j["n"] = f.labels.empty() ? 0 : from_label(f.labels.front()).num_qubits();
      j["labels"] = f.labels;
      break;
    case StateKind::kPermutations:
      j["d"] = f.perms.empty() ? 0 : f.perms.front().size();
      j["perms"] = f.perms;
      break;
    case StateKind::kProduct: {
      j["dA"] = f.product->dim_a();
      j["dB"] = f.product->dim_b();
      Json states = Json::array();
      for (const auto& s : f.product->states()) {
        states.push_back({{"a", ket_to_json(s.alice)}, {"b", ket_to_json(s.bob)}});
      }
      j["states"] = std::move(states);
      break;
    }
  }
  return j;
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"schema", kSchema}, {"kind", "graph"}, {"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j, const std::string& where) {
  const std::size_t n = size_field(j, "n", where);
  const Json& edges = field(j, "edges", where);
  if (!edges.is_array()) fail(where + ".edges", "expected an array");
  Graph g(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string path = index_path(where + ".edges", i);
    const Json& e = edges[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      fail(path, "expected a [u, v] pair");
    }
    const auto u = e[0].get<long long>();
    const auto v = e[1].get<long long>();
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n || u == v) {
      fail(path, "edge endpoints must be distinct vertices below n");
    }
    g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  }
  return g;
}

Json cover_to_json(const CliqueCover& c) { return c.parts; }

CliqueCover cover_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of vertex lists");
  CliqueCover c;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string path = index_path(where, i);
    if (!j[i].is_array()) fail(path, "expected an array of vertices");
    std::vector<std::size_t> part;
    for (std::size_t k = 0; k < j[i].size(); ++k) {
      const Json& v = j[i][k];
      if (!v.is_number_integer() || v.get<long long>() < 0) fail(index_path(path, k), "expected a vertex index");
      part.push_back(v.get<std::size_t>());
    }
    c.parts.push_back(std::move(part));
  }
  return c;
}

Json protocol_to_json(const OneWayProtocol& p) {
  Json alice = Json::array();
  for (const auto& a : p.alice) alice.push_back(matrix_to_json(a));
  Json bob = Json::array();
  for (const auto& outcome : p.bob) {
    Json ops = Json::array();
    for (const auto& b : outcome) ops.push_back(matrix_to_json(b));
    bob.push_back(std::move(ops));
  }
  Json j{{"schema", kSchema}, {"kind", "one_way"}, {"alice", alice}, {"bob", bob}};
  if (!p.labels.empty()) j["labels"] = p.labels;
  return j;
}

OneWayProtocol protocol_from_json(const Json& j, const std::string& where) {
  OneWayProtocol p;
  const Json& alice = field(j, "alice", where);
  if (!alice.is_array()) fail(where + ".alice", "expected an array of matrices");
  for (std::size_t i = 0; i < alice.size(); ++i) {
    p.alice.push_back(matrix_from_json(alice[i], index_path(where + ".alice", i)));
  }
  const Json& bob = field(j, "bob", where);
  if (!bob.is_array()) fail(where + ".bob", "expected an array of POVMs");
  for (std::size_t k = 0; k < bob.size(); ++k) {
    const std::string path = index_path(where + ".bob", k);
    if (!bob[k].is_array()) fail(path, "expected an array of matrices");
    std::vector<ComplexMatrix> ops;
    for (std::size_t i = 0; i < bob[k].size(); ++i) {
      ops.push_back(matrix_from_json(bob[k][i], index_path(path, i)));
    }
    p.bob.push_back(std::move(ops));
  }
  if (const auto it = j.find("labels"); it != j.end()) {
    if (!it->is_array()) fail(where + ".labels", "expected an array of arrays");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const Json& row = (*it)[k];
      if (!row.is_array()) fail(index_path(where + ".labels", k), "expected an array");
      std::vector<long> labels;
      for (const auto& l : row) {
        if (!l.is_number_integer()) fail(index_path(where + ".labels", k), "labels must be integers");
        labels.push_back(l.get<long>());
      }
      p.labels.push_back(std::move(labels));
    }
  }
  return p;
}

}  // namespace locc::io
