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

#include "gcx/error.hpp"

namespace gcx {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kNotConnected: return "NotConnected";
    case ErrorCode::kValenceTooLow: return "ValenceTooLow";
    case ErrorCode::kLabelOutOfRange: return "LabelOutOfRange";
    case ErrorCode::kSelfLoopContraction: return "SelfLoopContraction";
    case ErrorCode::kNotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::kDomainMismatch: return "DomainMismatch";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kBasisMismatch: return "BasisMismatch";
    case ErrorCode::kMixedBidegree: return "MixedBidegree";
    case ErrorCode::kNotClosed: return "NotClosed";
    case ErrorCode::kPairingNotFound: return "PairingNotFound";
    case ErrorCode::kSubsetTooSmall: return "SubsetTooSmall";
    case ErrorCode::kUnclassifiable: return "Unclassifiable";
    case ErrorCode::kNotTypeTwo: return "NotTypeTwo";
    case ErrorCode::kNotAPair: return "NotAPair";
    case ErrorCode::kRepeatedEdgesStrictMode: return "RepeatedEdgesStrictMode";
    case ErrorCode::kNotTrivalent: return "NotTrivalent";
    case ErrorCode::kAuditFailure: return "AuditFailure";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace gcx
