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

#include "ptincl/transport/frame.hpp"

#include <string>

#include "ptincl/error.hpp"

namespace ptincl::transport {

std::vector<uint8_t> EncodeFrame(const Frame& frame) {
  if (frame.payload.size() + 1 > kMaxFrameLength) {
    throw Error(ErrorCode::kFrameDecode, "frame exceeds the maximum size");
  }
  const uint32_t len = static_cast<uint32_t>(frame.payload.size() + 1);
  std::vector<uint8_t> out;
  out.reserve(frame.wire_size());
  for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<uint8_t>(len >> s));
  out.push_back(frame.tag);
  out.insert(out.end(), frame.payload.begin(), frame.payload.end());
  return out;
}

uint32_t DecodeLength(std::span<const uint8_t, kFrameHeaderSize> header) {
  uint32_t len = 0;
  for (uint8_t b : header) len = (len << 8) | b;
  if (len == 0) throw Error(ErrorCode::kFrameDecode, "zero frame length");
  if (len > kMaxFrameLength) {
    throw Error(ErrorCode::kFrameDecode,
                "frame length " + std::to_string(len) + " exceeds limit");
  }
  return len;
}

std::optional<Frame> DecodeFrame(std::span<const uint8_t> bytes,
                                 size_t* consumed) {
  if (bytes.size() < kFrameHeaderSize) return std::nullopt;
  const uint32_t len = DecodeLength(bytes.first<kFrameHeaderSize>());
  if (bytes.size() - kFrameHeaderSize < len) return std::nullopt;
  Frame f;
  f.tag = bytes[kFrameHeaderSize];
  f.payload.assign(bytes.begin() + kFrameHeaderSize + 1,
                   bytes.begin() + kFrameHeaderSize + len);
  if (consumed) *consumed = kFrameHeaderSize + len;
  return f;
}

}  // namespace ptincl::transport
