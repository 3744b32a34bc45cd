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

#include "locc/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "locc/graphs.hpp"
#include "locc/oracle.hpp"
#include "locc/pauli.hpp"

namespace locc::cli {

namespace {

using io::Json;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string statement_for(Decision d) {
  switch (d) {
    case Decision::kDistinguishable:
      return "the states are distinguishable by one-way LOCC with Alice going first";
    case Decision::kIndistinguishable:
      return "the states are not distinguishable by one-way LOCC with Alice going first";
    case Decision::kNotApplicable:
      return "the criterion does not apply to this state set";
  }
  return "";
}

VerdictRecord not_applicable(std::string criterion, std::string why) {
  VerdictRecord r;
  r.decision = Decision::kNotApplicable;
  r.criterion = std::move(criterion);
  r.diagnostic = std::move(why);
  return r;
}

Json block_to_json(const Block& b) { return {{"m", b.m}, {"n", b.n}}; }

Json kets_to_json(const std::vector<Ket>& kets) {
  Json out = Json::array();
  for (const auto& k : kets) out.push_back(io::ket_to_json(k));
  return out;
}

std::vector<ComplexMatrix> matrices_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw LoccError(ErrorCode::kParseError, where + ": expected an array of matrices");
  std::vector<ComplexMatrix> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(io::matrix_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

const Json& require(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw LoccError(ErrorCode::kParseError, std::string("protocol: missing field \"") + key + "\"");
  }
  return *it;
}

std::pair<std::size_t, std::size_t> index_pair(const Json& j, std::size_t count) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() || !j[1].is_number_unsigned()) {
    throw LoccError(ErrorCode::kParseError, "protocol: \"pair\" must be two state indices");
  }
  const auto a = j[0].get<std::size_t>();
  const auto b = j[1].get<std::size_t>();
  if (a >= count || b >= count || a == b) {
    throw LoccError(ErrorCode::kParseError, "protocol: \"pair\" out of range");
  }
  return {a, b};
}

bool all_permutations(const std::vector<ComplexMatrix>& us, Tolerance tol) {
  for (const auto& u : us) {
    if (!is_permutation_matrix(u, tol)) return false;
  }
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> overlapping_pair(const StateSet& s, Tolerance tol) {
  for (std::size_t i = 0; i < s.kets.size(); ++i) {
    for (std::size_t j = i + 1; j < s.kets.size(); ++j) {
      if (std::abs(inner(s.kets[i], s.kets[j])) > tol.abs) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

VerdictRecord by_permutation(const io::StateSetFile& f, Tolerance tol) {
  const char* name = "permutation";
  if (f.is_product()) return not_applicable(name, "product state sets carry no unitaries");
  if (!all_permutations(f.unitaries, tol)) {
    return not_applicable(name, "the unitaries are not all permutation matrices");
  }
  VerdictRecord r;
  r.criterion = name;
  const std::size_t d = static_cast<std::size_t>(f.unitaries.front().rows());
  if (check_permutation_states(f.unitaries, tol)) {
    r.decision = Decision::kDistinguishable;
    std::vector<Ket> basis;
    for (std::size_t k = 0; k < d; ++k) basis.push_back(Ket::Unit(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(k)));
    r.certificate = Json{{"schema", io::kSchema},
                         {"kind", "weighted_states"},
                         {"states", kets_to_json(basis)},
                         {"weights", std::vector<double>(d, 1.0)}};
    return r;
  }
  r.decision = Decision::kIndistinguishable;
  std::vector<std::vector<std::size_t>> sigma;
  for (const auto& p : f.unitaries) sigma.push_back(permutation_of(p, tol));
  for (std::size_t i = 0; i < sigma.size() && !r.refutation; ++i) {
    for (std::size_t j = i + 1; j < sigma.size() && !r.refutation; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        if (sigma[i][k] == sigma[j][k]) {
          r.refutation = Json{{"schema", io::kSchema},
                              {"kind", "permutation_fixed_point"},
                              {"pair", {i, j}},
                              {"point", k}};
          break;
        }
      }
    }
  }
  return r;
}

VerdictRecord by_schmidt(const io::StateSetFile& f, Tolerance tol, std::uint64_t seed) {
  const char* name = "schmidt";
  if (f.is_product()) return not_applicable(name, "product state sets carry no unitaries");
  if (!check_simultaneous_schmidt(f.unitaries, tol)) {
    return not_applicable(name, "the unitaries have no simultaneous Schmidt decomposition");
  }
  auto ws = schmidt_weighted_states(f.unitaries, tol, seed);
  if (!ws) throw LoccError(ErrorCode::kNumerical, "could not build Schmidt measurement states");
  VerdictRecord r;
  r.criterion = name;
  r.decision = Decision::kDistinguishable;
  r.certificate = Json{{"schema", io::kSchema},
                       {"kind", "weighted_states"},
                       {"states", kets_to_json(ws->states)},
                       {"weights", ws->weights}};
  return r;
}

VerdictRecord by_algebra(const io::StateSetFile& f, Tolerance tol, std::uint64_t seed) {
  const char* name = "algebra";
  if (f.is_product()) return not_applicable(name, "product state sets carry no unitaries");
  const AlgebraVerdict v = decide_by_algebra(f.unitaries, tol, seed);
  if (v.decision == Decision::kNotApplicable) return not_applicable(name, v.report);
  VerdictRecord r;
  r.criterion = name;
  r.decision = v.decision;
  if (v.decision == Decision::kDistinguishable) {
    r.certificate = Json{{"schema", io::kSchema},
                         {"kind", "separating_vector"},
                         {"vector", io::ket_to_json(*v.certificate.vector)}};
  } else {
    r.refutation = Json{{"schema", io::kSchema},
                        {"kind", "refuting_block"},
                        {"block", block_to_json(*v.certificate.refuting_block)}};
  }
  return r;
}

VerdictRecord by_qubit_sender(const io::StateSetFile& f, Tolerance tol) {
  const char* name = "qubit-sender";
  if (!f.is_product()) return not_applicable(name, "the criterion needs a product state set");
  if (f.product->dim_a() != 2) return not_applicable(name, "the criterion needs dim(A) = 2");
  const QubitSenderDecision d = decide_qubit_sender(*f.product, tol);
  VerdictRecord r;
  r.criterion = name;
  r.decision = d.decision;
  if (d.decision == Decision::kDistinguishable) {
    Json cert = io::protocol_to_json(extract_qubit_protocol(*f.product, *d.certificate, tol));
    cert["v1"] = d.certificate->v1;
    cert["v2"] = d.certificate->v2;
    r.certificate = std::move(cert);
  } else {
    r.refutation = Json{{"schema", io::kSchema},
                        {"kind", "no_two_clique_sandwich"},
                        {"alice_graph", io::graph_to_json(alice_graph(*f.product, tol))},
                        {"bob_graph", io::graph_to_json(bob_graph(*f.product, tol))}};
  }
  return r;
}

const std::vector<ComplexMatrix>& require_unitaries(const io::StateSetFile& f, const std::string& kind) {
  if (f.is_product()) {
    throw LoccError(ErrorCode::kDimensionMismatch, kind + " needs a maximally entangled state set");
  }
  return f.unitaries;
}

const ProductStateSet& require_product(const io::StateSetFile& f, const std::string& kind) {
  if (!f.is_product()) throw LoccError(ErrorCode::kDimensionMismatch, kind + " needs a product state set");
  return *f.product;
}

VerifyResult verify_closed_system(const std::vector<ComplexMatrix>& us, Tolerance tol,
                                  OperatorSystem& s0) {
  s0 = build_operator_system(us, tol);
  if (!s0.closed_under_mult) return {false, "S0 is not closed under multiplication"};
  return {true, ""};
}

VerifyResult verify_unchecked(const io::StateSetFile& f, const Json& p, Tolerance tol) {
  if (!p.is_object()) throw LoccError(ErrorCode::kParseError, "protocol: expected a JSON object");
  if (const auto it = p.find("schema");
      it != p.end() && (!it->is_string() || it->get<std::string>() != io::kSchema)) {
    throw LoccError(ErrorCode::kParseError, "protocol: unsupported schema");
  }
  const Json& kind_json = require(p, "kind");
  if (!kind_json.is_string()) throw LoccError(ErrorCode::kParseError, "protocol: \"kind\" must be a string");
  const std::string kind = kind_json.get<std::string>();
  const StateSet states = f.state_set(tol);

  if (kind == "product_povm") {
    const ProductStateSet& s = require_product(f, kind);
    const CliqueCover cover = io::cover_from_json(require(p, "cover"), "protocol.cover");
    for (const auto& part : cover.parts) {
      for (const std::size_t v : part) {
        if (v >= s.size()) throw LoccError(ErrorCode::kVertexCountMismatch, "cover vertex out of range");
      }
    }
    Graph g(s.size());
    if (const auto it = p.find("graph"); it != p.end()) {
      g = io::graph_from_json(*it, "protocol.graph");
    } else {
      for (const auto& part : cover.parts) {
        for (std::size_t a = 0; a < part.size(); ++a) {
          for (std::size_t b = a + 1; b < part.size(); ++b) {
            if (part[a] != part[b]) g.add_edge(part[a], part[b]);
          }
        }
      }
    }
    Povm povm{matrices_from_json(require(p, "povm"), "protocol.povm"), tol};
    const bool ok = verify_product_protocol(s, g, cover, povm, tol);
    return {ok, ok ? "product POVM protocol verified" : "product POVM protocol conditions fail"};
  }
  if (kind == "weighted_states") {
    const auto& us = require_unitaries(f, kind);
    WeightedStates ws;
    const Json& kets = require(p, "states");
    if (!kets.is_array()) throw LoccError(ErrorCode::kParseError, "protocol.states: expected an array");
    for (std::size_t i = 0; i < kets.size(); ++i) {
      ws.states.push_back(io::ket_from_json(kets[i], "protocol.states[" + std::to_string(i) + "]"));
    }
    if (const auto it = p.find("weights"); it != p.end()) {
      if (!it->is_array() || it->size() != kets.size()) {
        throw LoccError(ErrorCode::kParseError, "protocol.weights: expected one weight per state");
      }
      for (const auto& w : *it) {
        if (!w.is_number()) throw LoccError(ErrorCode::kParseError, "protocol.weights: expected numbers");
        ws.weights.push_back(w.get<double>());
      }
    } else {
      ws.weights.assign(ws.states.size(), 1.0);
    }
    const bool ok = verify_weighted_states(ws, us, tol);
    return {ok, ok ? "measurement states verified" : "measurement states fail the conditions"};
  }
  if (kind == "isometry_condition") {
    const auto& us = require_unitaries(f, kind);
    const PartialIsometry w(io::matrix_from_json(require(p, "W"), "protocol.W"), tol);
    const bool ok = verify_isometry_condition(w, us, tol);
    return {ok, ok ? "isometry verified" : "isometry fails the conditions"};
  }
  if (kind == "one_way") {
    const OneWayProtocol proto = io::protocol_from_json(p, "protocol");
    const SimulationReport rep = simulate_one_way_protocol_report(states, proto, tol);
    if (rep.success) return {true, "simulation identifies every state"};
    return {false, "state " + std::to_string(rep.worst_state) + " is misidentified with probability " +
                       std::to_string(rep.worst_error)};
  }
  if (kind == "separating_vector") {
    const auto& us = require_unitaries(f, kind);
    const Ket psi = io::ket_from_json(require(p, "vector"), "protocol.vector");
    if (static_cast<std::size_t>(psi.size()) != static_cast<std::size_t>(us.front().rows())) {
      throw LoccError(ErrorCode::kDimensionMismatch, "vector length differs from d");
    }
    OperatorSystem s0;
    if (auto r = verify_closed_system(us, tol, s0); !r.ok) return r;
    const bool ok = is_separating(s0, psi);
    return {ok, ok ? "vector separates S0" : "vector does not separate S0"};
  }
  if (kind == "refuting_block") {
    const auto& us = require_unitaries(f, kind);
    const Json& b = require(p, "block");
    if (!b.is_object() || !b.contains("m") || !b.contains("n")) {
      throw LoccError(ErrorCode::kParseError, "protocol.block: expected {\"m\", \"n\"}");
    }
    const Block claimed{b["m"].get<std::size_t>(), b["n"].get<std::size_t>()};
    if (claimed.n >= claimed.m) return {false, "block admits a separating vector"};
    OperatorSystem s0;
    if (auto r = verify_closed_system(us, tol, s0); !r.ok) return r;
    const AlgebraDecomposition dec = decompose(s0);
    for (const auto& blk : dec.blocks) {
      if (blk == claimed) return {true, "S0 has a block with n < m"};
    }
    return {false, "S0 has no such block"};
  }
  if (kind == "permutation_fixed_point") {
    const auto& us = require_unitaries(f, kind);
    const auto [i, j] = index_pair(require(p, "pair"), us.size());
    const Json& pt = require(p, "point");
    if (!pt.is_number_unsigned() || pt.get<std::size_t>() >= static_cast<std::size_t>(us[i].rows())) {
      throw LoccError(ErrorCode::kParseError, "protocol.point: out of range");
    }
    const auto k = static_cast<Eigen::Index>(pt.get<std::size_t>());
    const ComplexMatrix m = adjoint(us[j]) * us[i];
    const bool ok = all_permutations(us, tol) && std::abs(m(k, k)) > tol.abs;
    return {ok, ok ? "Delta(P_j^* P_i) is nonzero" : "no fixed point at this index"};
  }
  if (kind == "non_orthogonal") {
    const auto [i, j] = index_pair(require(p, "pair"), states.kets.size());
    const bool ok = std::abs(inner(states.kets[i], states.kets[j])) > tol.abs;
    return {ok, ok ? "the states overlap" : "the states are orthogonal"};
  }
  if (kind == "no_two_clique_sandwich") {
    const ProductStateSet& s = require_product(f, kind);
    if (s.dim_a() != 2) throw LoccError(ErrorCode::kBadDimension, "the criterion needs dim(A) = 2");
    const bool ok = !find_two_clique_sandwich(alice_graph(s, tol), bob_graph(s, tol)).has_value();
    return {ok, ok ? "no two-clique sandwich exists" : "a two-clique sandwich exists"};
  }
  throw LoccError(ErrorCode::kParseError, "protocol: unknown kind \"" + kind + "\"");
}

Tolerance tolerance_option(const std::optional<double>& tol) {
  return tol ? Tolerance(*tol) : default_tolerance();
}

std::uint64_t parse_seed(const std::string& text) {
  std::size_t used = 0;
  std::uint64_t seed = 0;
  try {
    seed = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw LoccError(ErrorCode::kBadParams, "invalid seed \"" + text + "\"");
  return seed;
}

Graph graph_for_cc(const std::string& path, const std::string& side, Tolerance tol) {
  const Json j = io::read_json_file(path);
  if (j.is_object() && j.value("kind", "") == "graph") {
    if (const auto it = j.find("schema");
        it != j.end() && (!it->is_string() || it->get<std::string>() != io::kSchema)) {
      throw LoccError(ErrorCode::kParseError, path + ": unsupported schema");
    }
    return io::graph_from_json(j, "$");
  }
  const io::StateSetFile f = io::parse_state_file(j);
  if (!f.is_product()) throw LoccError(ErrorCode::kDimensionMismatch, "cc needs a graph or product file");
  if (side == "A") return alice_graph(*f.product, tol);
  if (side == "B") return bob_graph(*f.product, tol);
  if (side == "Bbar") return complement(bob_graph(*f.product, tol));
  throw LoccError(ErrorCode::kBadParams, "--side must be A, B or Bbar");
}

}  // namespace

std::string_view criterion_name(Criterion c) {
  switch (c) {
    case Criterion::kAuto: return "auto";
    case Criterion::kAlgebra: return "algebra";
    case Criterion::kPermutation: return "permutation";
    case Criterion::kSchmidt: return "schmidt";
    case Criterion::kQubitSender: return "qubit-sender";
  }
  return "";
}

std::optional<Criterion> parse_criterion(std::string_view name) {
  for (const Criterion c : {Criterion::kAuto, Criterion::kAlgebra, Criterion::kPermutation,
                            Criterion::kSchmidt, Criterion::kQubitSender}) {
    if (criterion_name(c) == name) return c;
  }
  return std::nullopt;
}

int exit_code(Decision d) {
  switch (d) {
    case Decision::kDistinguishable: return kExitYes;
    case Decision::kIndistinguishable: return kExitNo;
    case Decision::kNotApplicable: return kExitNotApplicable;
  }
  return kExitError;
}

VerdictRecord decide(const io::StateSetFile& file, const DecideOptions& opts) {
  const auto start = Clock::now();
  const StateSet states = file.state_set(opts.tol);
  VerdictRecord r;
  if (const auto pair = overlapping_pair(states, opts.tol)) {
    r.decision = Decision::kIndistinguishable;
    r.criterion = "orthogonality";
    r.refutation = Json{{"schema", io::kSchema},
                        {"kind", "non_orthogonal"},
                        {"pair", {pair->first, pair->second}}};
  } else {
    switch (opts.criterion) {
      case Criterion::kPermutation: r = by_permutation(file, opts.tol); break;
      case Criterion::kSchmidt: r = by_schmidt(file, opts.tol, opts.seed); break;
      case Criterion::kAlgebra: r = by_algebra(file, opts.tol, opts.seed); break;
      case Criterion::kQubitSender: r = by_qubit_sender(file, opts.tol); break;
      case Criterion::kAuto:
        if (file.is_product()) {
          r = by_qubit_sender(file, opts.tol);
          break;
        }
        if (all_permutations(file.unitaries, opts.tol)) {
          r = by_permutation(file, opts.tol);
          break;
        }
        r = by_schmidt(file, opts.tol, opts.seed);
        if (r.decision == Decision::kNotApplicable) r = by_algebra(file, opts.tol, opts.seed);
        break;
    }
  }
  r.statement = statement_for(r.decision);
  r.decide_ms = elapsed_ms(start);
  return r;
}

Json to_json(const VerdictRecord& r) {
  Json j{{"schema", io::kSchema},
         {"verdict", std::string(decision_name(r.decision))},
         {"criterion", r.criterion},
         {"statement", r.statement}};
  if (r.certificate) j["certificate"] = *r.certificate;
  if (r.refutation) j["refutation"] = *r.refutation;
  if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
  j["timings_ms"] = {{"decide", r.decide_ms}};
  return j;
}

VerifyResult verify(const io::StateSetFile& states, const Json& protocol, Tolerance tol) {
  try {
    return verify_unchecked(states, protocol, tol);
  } catch (const LoccError& e) {
    switch (e.code()) {
      case ErrorCode::kInvalidPovm:
      case ErrorCode::kNotCoisometry:
      case ErrorCode::kInvalidProtocol:
      case ErrorCode::kInvalidCertificate:
      case ErrorCode::kNotOrthogonalStates:
        return {false, e.what()};
      default:
        throw;
    }
  }
}

io::StateSetFile generate(std::string_view family, int n, int k) {
  if (k < 1 || n < k || n > 6) throw LoccError(ErrorCode::kBadParams, "need 1 <= k <= n <= 6");
  PauliSet ops;
  if (family == "lattice") {
    ops = lattice_indistinguishable_set(n, k);
  } else if (family == "logical-pauli") {
    ops = logical_pauli_set(n, k);
  } else {
    throw LoccError(ErrorCode::kBadParams, "unknown family \"" + std::string(family) + "\"");
  }
  io::StateSetFile f;
  f.kind = io::StateKind::kPauliLabels;
  for (const auto& op : ops) {
    f.labels.push_back(to_label(op));
    f.unitaries.push_back(to_dense(op));
  }
  return f;
}

Tolerance default_tolerance() {
  const char* env = std::getenv("LOCC_TOL");
  if (env == nullptr || *env == '\0') return {};
  char* end = nullptr;
  const double value = std::strtod(env, &end);
  if (end == env || *end != '\0') throw LoccError(ErrorCode::kBadParams, "LOCC_TOL is not a number");
  return Tolerance(value);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide, certify or refute one-way LOCC distinguishability of bipartite states", "locc"};
  app.require_subcommand(1);

  std::string path;
  std::optional<double> tol;
  std::string seed_text = std::to_string(kDefaultSeed);
  bool json = false;

  auto* decide_cmd = app.add_subcommand("decide", "Decide distinguishability of a state-set file");
  std::string criterion_text = "auto";
  decide_cmd->add_option("path", path, "State-set JSON file")->required();
  decide_cmd->add_option("--criterion", criterion_text, "auto|algebra|permutation|schmidt|qubit-sender")
      ->check(CLI::IsMember({"auto", "algebra", "permutation", "schmidt", "qubit-sender"}));
  decide_cmd->add_option("--tol", tol, "Absolute tolerance");
  decide_cmd->add_option("--seed", seed_text, "Seed for randomized steps");
  decide_cmd->add_flag("--json", json, "Machine-readable output");

  auto* gen_cmd = app.add_subcommand("gen", "Write a Pauli state-set family");
  std::string family;
  int n = 0;
  int k = 0;
  std::string out_path;
  gen_cmd->add_option("--family", family, "lattice|logical-pauli")
      ->required()
      ->check(CLI::IsMember({"lattice", "logical-pauli"}));
  gen_cmd->add_option("-n", n, "Number of qubits")->required();
  gen_cmd->add_option("-k", k, "Family parameter")->required();
  gen_cmd->add_option("-o,--out", out_path, "Output file (stdout when absent)");

  auto* verify_cmd = app.add_subcommand("verify", "Check a protocol or certificate against a state set");
  std::string protocol_path;
  verify_cmd->add_option("path", path, "State-set JSON file")->required();
  verify_cmd->add_option("protocol", protocol_path, "Protocol or certificate JSON file")->required();
  verify_cmd->add_option("--tol", tol, "Absolute tolerance");

  auto* cc_cmd = app.add_subcommand("cc", "Clique cover number of a graph");
  std::string side = "A";
  bool show_cover = false;
  cc_cmd->add_option("path", path, "Graph or product state-set JSON file")->required();
  cc_cmd->add_option("--side", side, "A|B|Bbar for product files")
      ->check(CLI::IsMember({"A", "B", "Bbar"}));
  cc_cmd->add_option("--tol", tol, "Absolute tolerance");
  cc_cmd->add_flag("--cover", show_cover, "Also print a minimum cover");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (decide_cmd->parsed()) {
      DecideOptions opts;
      opts.criterion = *parse_criterion(criterion_text);
      opts.tol = tolerance_option(tol);
      opts.seed = parse_seed(seed_text);
      const auto start = Clock::now();
      const io::StateSetFile f = io::load_state_file(path);
      const double parse_ms = elapsed_ms(start);
      const VerdictRecord r = decide(f, opts);
      if (json) {
        Json j = to_json(r);
        j["timings_ms"]["parse"] = parse_ms;
        out << j.dump(2) << "\n";
      } else {
        out << "verdict: " << decision_name(r.decision) << "\n";
        out << "criterion: " << r.criterion << "\n";
        out << r.statement << "\n";
        if (r.certificate) out << "certificate: " << (*r.certificate)["kind"].get<std::string>() << "\n";
        if (r.refutation) out << "refutation: " << (*r.refutation)["kind"].get<std::string>() << "\n";
        if (!r.diagnostic.empty()) out << "diagnostic: " << r.diagnostic << "\n";
      }
      return exit_code(r.decision);
    }
    if (gen_cmd->parsed()) {
      const Json j = io::to_json(generate(family, n, k));
      if (out_path.empty()) {
        out << j.dump(2) << "\n";
      } else {
        io::write_json_file(out_path, j);
        out << "wrote " << j["labels"].size() << " labels to " << out_path << "\n";
      }
      return 0;
    }
    if (verify_cmd->parsed()) {
      const Tolerance t = tolerance_option(tol);
      const io::StateSetFile f = io::load_state_file(path);
      const Json p = io::read_json_file(protocol_path);
      const VerifyResult r = verify(f, p, t);
      out << (r.ok ? "verified: " : "not verified: ") << r.message << "\n";
      return r.ok ? kExitYes : kExitNo;
    }
    if (cc_cmd->parsed()) {
      const Graph g = graph_for_cc(path, side, tolerance_option(tol));
      const CliqueCover cover = minimum_clique_cover(g);
      out << cover.size() << "\n";
      if (show_cover) out << io::cover_to_json(cover).dump() << "\n";
      return 0;
    }
  } catch (const LoccError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace locc::cli
