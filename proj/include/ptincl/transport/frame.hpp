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

#ifndef PTINCL_TRANSPORT_FRAME_HPP_
#define PTINCL_TRANSPORT_FRAME_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ptincl::transport {

// Largest accepted value of the length field (tag plus payload).
inline constexpr uint32_t kMaxFrameLength = 16u << 20;
inline constexpr size_t kFrameHeaderSize = 4;

// Tag reserved for the connection handshake. Handshake frames are not
// counted as protocol rounds.
inline constexpr uint8_t kTagHello = 0x01;

struct Frame {
  uint8_t tag = 0;
  std::vector<uint8_t> payload;

  // Bytes on the wire, header included.
  size_t wire_size() const { return kFrameHeaderSize + 1 + payload.size(); }

  friend bool operator==(const Frame&, const Frame&) = default;
};

std::vector<uint8_t> EncodeFrame(const Frame& frame);

// Validates a big-endian length header. Throws Error(kFrameDecode) when the
// length is zero or above kMaxFrameLength.
uint32_t DecodeLength(std::span<const uint8_t, kFrameHeaderSize> header);

// Decodes one frame from the front of `bytes`. Returns nullopt when more
// bytes are needed; sets *consumed on success.
std::optional<Frame> DecodeFrame(std::span<const uint8_t> bytes,
                                 size_t* consumed);

}  // namespace ptincl::transport

#endif  // PTINCL_TRANSPORT_FRAME_HPP_
