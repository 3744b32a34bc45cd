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

#include <stdexcept>
#include <string>
#include <string_view>

namespace locc {

enum class ErrorCode {
  kNonUnitary,
  kNonSquare,
  kDimensionMismatch,
  kInvalidPovm,
  kNotCoisometry,
  kNotOrthogonalStates,
  kNotPermutation,
  kBadParams,
  kBadLabel,
  kNotAnAlgebra,
  kSamplingFailed,
  kZeroVector,
  kVertexCountMismatch,
  kTooLarge,
  kNotSpanning,
  kBadDimension,
  kInvalidCertificate,
  kInvalidProtocol,
  kParseError,
  kNumerical,
};

std::string_view error_code_name(ErrorCode code);

/// Every recoverable failure in the library is reported as a LoccError
/// carrying a machine-checkable code.
class LoccError : public std::runtime_error {
 public:
  LoccError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace locc
