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

#ifndef PTINCL_TRANSPORT_TRANSCRIPT_HPP_
#define PTINCL_TRANSPORT_TRANSCRIPT_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

#include "ptincl/transport/frame.hpp"

namespace ptincl::transport {

enum class Direction : uint8_t { kAliceToBob, kBobToAlice };

const char* DirectionName(Direction d);

struct TranscriptRecord {
  uint64_t seq = 0;
  Direction direction = Direction::kAliceToBob;
  uint8_t tag = 0;
  // Wire size of the frame, header included.
  uint32_t length = 0;
  // Hex BLAKE2b-128 of the payload.
  std::string payload_hash;
  // Microseconds since the transcript was created.
  int64_t timestamp_us = 0;

  // Equality ignores timestamps.
  friend bool operator==(const TranscriptRecord& a, const TranscriptRecord& b) {
    return a.seq == b.seq && a.direction == b.direction && a.tag == b.tag &&
           a.length == b.length && a.payload_hash == b.payload_hash;
  }
};

// Append-only, internally synchronized frame log.
class Transcript {
 public:
  Transcript();
  Transcript(const Transcript& other);
  Transcript& operator=(const Transcript& other);

  void Append(Direction direction, const Frame& frame);
  std::vector<TranscriptRecord> records() const;
  size_t size() const;

  // Direction alternations plus one over non-handshake frames; 0 for an
  // empty transcript.
  size_t Rounds() const;
  size_t Bytes(Direction direction) const;
  size_t TotalBytes() const;
  size_t Count(Direction direction) const;
  size_t CountTag(uint8_t tag) const;
  // Frame lengths received by the given side, in order.
  std::vector<uint32_t> LengthsTo(Direction direction) const;

  std::string ToJsonLines(bool with_timestamps = true) const;
  // Throws Error(kMalformedTranscript).
  static Transcript FromJsonLines(const std::string& text);

  // Record equality without timestamps.
  bool SameFrames(const Transcript& other) const;

 private:
  static size_t RoundsOf(const std::vector<TranscriptRecord>& records);

  mutable std::mutex mu_;
  std::chrono::steady_clock::time_point start_;
  std::vector<TranscriptRecord> records_;
};

std::string PayloadHash(const std::vector<uint8_t>& payload);

}  // namespace ptincl::transport

#endif  // PTINCL_TRANSPORT_TRANSCRIPT_HPP_
