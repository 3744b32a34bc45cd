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

// Command-line front end: decide, gen, verify and cc.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "locc/io.hpp"
#include "locc/operator_algebra.hpp"

namespace locc::cli {

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitNotApplicable = 2;
inline constexpr int kExitError = 3;

enum class Criterion { kAuto, kAlgebra, kPermutation, kSchmidt, kQubitSender };

std::string_view criterion_name(Criterion c);
std::optional<Criterion> parse_criterion(std::string_view name);

struct DecideOptions {
  Criterion criterion = Criterion::kAuto;
  Tolerance tol;
  std::uint64_t seed = kDefaultSeed;
};

/// A verdict with its evidence. certificate backs a positive verdict,
/// refutation a negative one, diagnostic explains inapplicability.
struct VerdictRecord {
  Decision decision = Decision::kNotApplicable;
  std::string criterion;
  std::string statement;
  std::optional<io::Json> certificate;
  std::optional<io::Json> refutation;
  std::string diagnostic;
  double decide_ms = 0.0;
};

VerdictRecord decide(const io::StateSetFile& file, const DecideOptions& opts);
io::Json to_json(const VerdictRecord& r);
int exit_code(Decision d);

struct VerifyResult {
  bool ok = false;
  std::string message;
};

/// Checks a protocol or certificate document against a state set. Throws
/// LoccError on malformed input.
VerifyResult verify(const io::StateSetFile& states, const io::Json& protocol, Tolerance tol = {});

/// pauli_labels file for the lattice or logical-Pauli family.
io::StateSetFile generate(std::string_view family, int n, int k);

/// Tolerance from LOCC_TOL, or the library default.
Tolerance default_tolerance();

/// Entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace locc::cli
