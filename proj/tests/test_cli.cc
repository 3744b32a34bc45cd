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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "locc/cli.hpp"
#include "locc/io.hpp"

namespace locc::cli {
namespace {

namespace fs = std::filesystem;
using io::Json;

std::string data(const std::string& name) { return std::string(LOCC_TEST_DATA) + "/" + name; }

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "locc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::path(::testing::TempDir()) / "locc_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const Json& j) {
  std::ofstream f(p);
  f << j.dump(2);
}

TEST(CliDecide, ExitCodesOnExampleFiles) {
  const std::vector<std::pair<std::string, int>> cases{
      {"bell.json", kExitYes},       {"pauli_n1.json", kExitNo},   {"perm_cyclic.json", kExitYes},
      {"perm_swap.json", kExitNo},   {"qubit_pos.json", kExitYes}, {"std_basis.json", kExitYes},
      {"final5.json", kExitNo},      {"bob_first.json", kExitNo},  {"c3_states.json", kExitNotApplicable}};
  for (const auto& [file, code] : cases) {
    EXPECT_EQ(run_cli({"decide", data(file)}).code, code) << file;
  }
}

TEST(CliDecide, ForcedCriteria) {
  EXPECT_EQ(run_cli({"decide", data("bell.json"), "--criterion", "algebra"}).code, kExitYes);
  EXPECT_EQ(run_cli({"decide", data("bell.json"), "--criterion", "schmidt"}).code, kExitYes);
  EXPECT_EQ(run_cli({"decide", data("bell.json"), "--criterion", "qubit-sender"}).code,
            kExitNotApplicable);
  EXPECT_EQ(run_cli({"decide", data("pauli_n1.json"), "--criterion", "permutation"}).code,
            kExitNotApplicable);
  EXPECT_EQ(run_cli({"decide", data("qubit_pos.json"), "--criterion", "algebra"}).code,
            kExitNotApplicable);
  EXPECT_EQ(run_cli({"decide", data("bell.json"), "--criterion", "magic"}).code, kExitError);
}

TEST(CliDecide, JsonRecord) {
  const auto r = run_cli({"decide", data("bell.json"), "--json"});
  ASSERT_EQ(r.code, kExitYes);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["schema"], "locc/1");
  EXPECT_EQ(j["verdict"], "distinguishable");
  EXPECT_TRUE(j.contains("certificate"));
  EXPECT_FALSE(j.contains("refutation"));
  EXPECT_TRUE(j["timings_ms"].contains("decide"));
  EXPECT_TRUE(j["timings_ms"].contains("parse"));

  const Json no = Json::parse(run_cli({"decide", data("pauli_n1.json"), "--json"}).out);
  EXPECT_EQ(no["verdict"], "indistinguishable");
  EXPECT_EQ(no["refutation"]["kind"], "refuting_block");

  const Json na = Json::parse(run_cli({"decide", data("c3_states.json"), "--json"}).out);
  EXPECT_EQ(na["verdict"], "criterion_not_applicable");
  EXPECT_TRUE(na.contains("diagnostic"));
}

TEST(CliDecide, HumanReadable) {
  const auto r = run_cli({"decide", data("final5.json")});
  EXPECT_NE(r.out.find("verdict: indistinguishable"), std::string::npos);
  EXPECT_NE(r.out.find("criterion: qubit-sender"), std::string::npos);
}

// Every emitted certificate or refutation passes verify.
TEST(CliDecide, EvidenceReverifies) {
  for (const std::string file : {"bell.json", "pauli_n1.json", "perm_cyclic.json", "perm_swap.json",
                                 "qubit_pos.json", "std_basis.json", "final5.json",
                                 "bob_first.json"}) {
    const auto r = run_cli({"decide", data(file), "--json"});
    const Json j = Json::parse(r.out);
    const Json evidence = j.contains("certificate") ? j["certificate"] : j["refutation"];
    const fs::path p = scratch("evidence_" + file);
    write(p, evidence);
    const auto v = run_cli({"verify", data(file), p.string()});
    EXPECT_EQ(v.code, kExitYes) << file << ": " << v.out << v.err;
  }
}

TEST(CliDecide, SeedStability) {
  const auto a = run_cli({"decide", data("pauli_n1.json"), "--json", "--seed", "0x1234"});
  const auto b = run_cli({"decide", data("pauli_n1.json"), "--json", "--seed", "0x1234"});
  const auto c = run_cli({"decide", data("pauli_n1.json"), "--json", "--seed", "42"});
  Json ja = Json::parse(a.out);
  Json jb = Json::parse(b.out);
  Json jc = Json::parse(c.out);
  for (auto* j : {&ja, &jb, &jc}) j->erase("timings_ms");
  EXPECT_EQ(ja, jb);
  EXPECT_EQ(ja["verdict"], jc["verdict"]);
  EXPECT_EQ(run_cli({"decide", data("bell.json"), "--seed", "nope"}).code, kExitError);
}

TEST(CliDecide, Errors) {
  EXPECT_EQ(run_cli({"decide", data("missing.json")}).code, kExitError);
  const fs::path bad = scratch("bad.json");
  std::ofstream(bad) << "{\"schema\": \"locc/1\",\n \"kind\": ";
  const auto r = run_cli({"decide", bad.string()});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("bad.json:2"), std::string::npos) << r.err;
  EXPECT_EQ(run_cli({}).code, kExitError);
  ::setenv("LOCC_TOL", "abc", 1);
  EXPECT_EQ(run_cli({"decide", data("bell.json")}).code, kExitError);
  ::setenv("LOCC_TOL", "1e-8", 1);
  EXPECT_EQ(run_cli({"decide", data("bell.json")}).code, kExitYes);
  ::unsetenv("LOCC_TOL");
}

TEST(CliGen, LogicalPauliRoundTrip) {
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= n; ++k) {
      const fs::path p = scratch("logical_" + std::to_string(n) + "_" + std::to_string(k) + ".json");
      ASSERT_EQ(run_cli({"gen", "--family", "logical-pauli", "-n", std::to_string(n), "-k",
                         std::to_string(k), "-o", p.string()})
                    .code,
                0);
      const io::StateSetFile f = io::load_state_file(p);
      EXPECT_EQ(f.kind, io::StateKind::kPauliLabels);
      EXPECT_EQ(io::to_json(f), io::read_json_file(p));
      const int expected = 2 * k <= n ? kExitYes : kExitNo;
      EXPECT_EQ(run_cli({"decide", p.string()}).code, expected) << n << " " << k;
    }
  }
}

TEST(CliGen, LatticeSizes) {
  const Json j2 = Json::parse(run_cli({"gen", "--family", "lattice", "-n", "2", "-k", "2"}).out);
  EXPECT_EQ(j2["labels"].size(), 5u);
  const Json j3 = Json::parse(run_cli({"gen", "--family", "lattice", "-n", "3", "-k", "2"}).out);
  EXPECT_EQ(j3["labels"].size(), 7u);
  const fs::path p = scratch("lattice_3_2.json");
  write(p, j3);
  EXPECT_EQ(run_cli({"decide", p.string()}).code, kExitNo);
}

TEST(CliGen, BadParameters) {
  EXPECT_EQ(run_cli({"gen", "--family", "logical-pauli", "-n", "2", "-k", "3"}).code, kExitError);
  EXPECT_EQ(run_cli({"gen", "--family", "logical-pauli", "-n", "7", "-k", "1"}).code, kExitError);
  EXPECT_EQ(run_cli({"gen", "--family", "other", "-n", "2", "-k", "1"}).code, kExitError);
  EXPECT_THROW(generate("lattice", 0, 0), LoccError);
}

TEST(CliVerify, ProtocolsAndCertificates) {
  EXPECT_EQ(run_cli({"verify", data("bell.json"), data("bell_protocol.json")}).code, kExitYes);
  EXPECT_EQ(run_cli({"verify", data("bell.json"), data("bell_isometry.json")}).code, kExitYes);
  EXPECT_EQ(run_cli({"verify", data("c3_states.json"), data("c3_povm.json")}).code, kExitYes);
  EXPECT_EQ(run_cli({"verify", data("c3_states.json"), data("c3_identity_povm.json")}).code, kExitNo);
  EXPECT_EQ(run_cli({"verify", data("bell.json"), data("missing.json")}).code, kExitError);
}

TEST(CliVerify, WrongLabelsRejected) {
  Json p = io::read_json_file(data("bell_protocol.json"));
  p["labels"] = Json::array({Json::array({0, 1}), Json::array({0, 1})});
  const fs::path path = scratch("bell_wrong_labels.json");
  write(path, p);
  EXPECT_EQ(run_cli({"verify", data("bell.json"), path.string()}).code, kExitNo);
}

TEST(CliCc, Graphs) {
  auto r = run_cli({"cc", data("c4_graph.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "4\n");
  EXPECT_EQ(run_cli({"cc", data("k5_graph.json")}).out, "1\n");
  r = run_cli({"cc", data("final5.json"), "--side", "Bbar", "--cover"});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string first;
  std::string second;
  std::getline(lines, first);
  std::getline(lines, second);
  EXPECT_EQ(first, "4");
  EXPECT_EQ(Json::parse(second), Json::parse("[[0,3],[0,4],[1,2,3],[1,2,4]]"));
  EXPECT_EQ(run_cli({"cc", data("std_basis.json"), "--side", "A"}).out, "2\n");
  EXPECT_EQ(run_cli({"cc", data("bell.json")}).code, kExitError);
}

TEST(CliIo, StateFilesRoundTrip) {
  for (const std::string file : {"bell.json", "pauli_n1.json", "perm_cyclic.json", "qubit_pos.json",
                                 "final5.json", "c3_states.json"}) {
    const io::StateSetFile f = io::load_state_file(data(file));
    const io::StateSetFile g = io::parse_state_file(io::to_json(f));
    EXPECT_EQ(io::to_json(g), io::to_json(f)) << file;
  }
}

TEST(CliIo, ParseErrorsNamePaths) {
  auto message = [](const Json& j) {
    try {
      io::parse_state_file(j);
    } catch (const LoccError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message(Json::parse(R"({"schema":"locc/2","kind":"product"})")).find("$.schema"),
            std::string::npos);
  EXPECT_NE(message(Json::parse(R"({"schema":"locc/1","kind":"pauli_labels","n":2,"labels":["XQ"]})"))
                .find("$.labels[0]"),
            std::string::npos);
  EXPECT_NE(message(Json::parse(R"({"schema":"locc/1","kind":"permutations","d":2,"perms":[[0,0]]})"))
                .find("$.perms[0]"),
            std::string::npos);
  EXPECT_NE(message(Json::parse(R"({"schema":"locc/1","kind":"banana"})")), "");
}

}  // namespace
}  // namespace locc::cli
