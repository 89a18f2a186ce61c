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

#include "ptincl/transport/channel.hpp"

#include <charconv>

#include "ptincl/error.hpp"

namespace ptincl::transport {

void RecordingChannel::Send(const Frame& frame) {
  inner_.Send(frame);
  transcript_.Append(outgoing_, frame);
}

Frame RecordingChannel::Receive() {
  Frame f = inner_.Receive();
  transcript_.Append(outgoing_ == Direction::kAliceToBob
                         ? Direction::kBobToAlice
                         : Direction::kAliceToBob,
                     f);
  return f;
}

HostPort ParseHostPort(const std::string& text) {
  const size_t colon = text.rfind(':');
  if (colon == std::string::npos || colon + 1 == text.size()) {
    throw Error(ErrorCode::kValidation,
                "address must be host:port, got '" + text + "'");
  }
  HostPort out;
  out.host = text.substr(0, colon);
  if (out.host.empty()) out.host = "127.0.0.1";
  if (out.host.size() > 2 && out.host.front() == '[' && out.host.back() == ']') {
    out.host = out.host.substr(1, out.host.size() - 2);
  }
  unsigned port = 0;
  const char* first = text.data() + colon + 1;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, port);
  if (ec != std::errc() || ptr != last || port > 65535) {
    throw Error(ErrorCode::kValidation, "bad port in '" + text + "'");
  }
  out.port = static_cast<uint16_t>(port);
  return out;
}

}  // namespace ptincl::transport
