// Copyright 2026 The gcx Authors
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

#ifndef GCX_ERROR_HPP_
#define GCX_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace gcx {

enum class ErrorCode {
  kEmptyGraph,
  kNotConnected,
  kValenceTooLow,
  kLabelOutOfRange,
  kSelfLoopContraction,
  kNotAnAutomorphism,
  kDomainMismatch,
  kLengthMismatch,
  kDimensionMismatch,
  kBasisMismatch,
  kMixedBidegree,
  kNotClosed,
  kPairingNotFound,
  kSubsetTooSmall,
  kUnclassifiable,
  kNotTypeTwo,
  kNotAPair,
  kRepeatedEdgesStrictMode,
  kNotTrivalent,
  kAuditFailure,
  kParseError,
  kInvalidArgument,
};

// Stable machine-readable name, e.g. "NotConnected".
std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code),
        detail_(message) {}

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace gcx

#endif  // GCX_ERROR_HPP_
