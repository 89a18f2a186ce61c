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

#ifndef PTINCL_ERROR_HPP_
#define PTINCL_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace ptincl {

enum class ErrorCode {
  // Input validation (CLI exit code 2).
  kValidation,
  kDegenerateVertex,
  kOnRay,
  kLengthMismatch,
  kPlaintextOutOfRange,
  kValueOutOfRange,
  kBoundViolation,
  kKeyMismatch,
  kGenerationFailure,
  kIo,
  kMalformedTranscript,
  // Transport (exit code 3).
  kChannelClosed,
  kNetwork,
  kFrameDecode,
  // Protocol execution (exit code 4).
  kOverflow,
  kConsistency,
  kHandshakeMismatch,
  kProtocol,
  kEntropy,
};

enum class ErrorCategory { kValidation, kNetwork, kProtocol };

// The single exception type thrown by the library. `from_peer` marks errors
// that were relayed by the other party through an abort frame.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, bool from_peer = false);

  ErrorCode code() const { return code_; }
  bool from_peer() const { return from_peer_; }

 private:
  ErrorCode code_;
  bool from_peer_;
};

const char* ErrorCodeName(ErrorCode code);
ErrorCategory CategoryOf(ErrorCode code);

// Exit code used by the command line tool: 2 validation, 3 network,
// 4 protocol.
int ExitCodeFor(ErrorCode code);

}  // namespace ptincl

#endif  // PTINCL_ERROR_HPP_
