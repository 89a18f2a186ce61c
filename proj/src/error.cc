/*
 * Copyright 2026 The ptincl Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ptincl/error.hpp"

namespace ptincl {

Error::Error(ErrorCode code, const std::string& message, bool from_peer)
    : std::runtime_error(message), code_(code), from_peer_(from_peer) {}

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kValidation: return "validation";
    case ErrorCode::kDegenerateVertex: return "degenerate-vertex";
    case ErrorCode::kOnRay: return "on-ray";
    case ErrorCode::kLengthMismatch: return "length-mismatch";
    case ErrorCode::kPlaintextOutOfRange: return "plaintext-out-of-range";
    case ErrorCode::kValueOutOfRange: return "value-out-of-range";
    case ErrorCode::kBoundViolation: return "bound-violation";
    case ErrorCode::kKeyMismatch: return "key-mismatch";
    case ErrorCode::kGenerationFailure: return "generation-failure";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kMalformedTranscript: return "malformed-transcript";
    case ErrorCode::kChannelClosed: return "channel-closed";
    case ErrorCode::kNetwork: return "network";
    case ErrorCode::kFrameDecode: return "frame-decode";
    case ErrorCode::kOverflow: return "overflow";
    case ErrorCode::kConsistency: return "consistency";
    case ErrorCode::kHandshakeMismatch: return "handshake-mismatch";
    case ErrorCode::kProtocol: return "protocol";
    case ErrorCode::kEntropy: return "entropy";
  }
  return "unknown";
}

ErrorCategory CategoryOf(ErrorCode code) {
  switch (code) {
    case ErrorCode::kChannelClosed:
    case ErrorCode::kNetwork:
    case ErrorCode::kFrameDecode:
      return ErrorCategory::kNetwork;
    case ErrorCode::kOverflow:
    case ErrorCode::kConsistency:
    case ErrorCode::kHandshakeMismatch:
    case ErrorCode::kProtocol:
    case ErrorCode::kEntropy:
    case ErrorCode::kOnRay:
      return ErrorCategory::kProtocol;
    default:
      return ErrorCategory::kValidation;
  }
}

int ExitCodeFor(ErrorCode code) {
  switch (CategoryOf(code)) {
    case ErrorCategory::kValidation: return 2;
    case ErrorCategory::kNetwork: return 3;
    case ErrorCategory::kProtocol: return 4;
  }
  return 4;
}

}  // namespace ptincl
