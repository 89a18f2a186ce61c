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

#include "ptincl/transport/transcript.hpp"

#include <sodium.h>

#include <array>
#include <sstream>

#include "json.hpp"
#include "ptincl/crypto/rng.hpp"
#include "ptincl/error.hpp"

namespace ptincl::transport {

const char* DirectionName(Direction d) {
  return d == Direction::kAliceToBob ? "alice->bob" : "bob->alice";
}

std::string PayloadHash(const std::vector<uint8_t>& payload) {
  crypto::EnsureSodium();
  std::array<uint8_t, 16> h{};
  crypto_generichash(h.data(), h.size(), payload.data(), payload.size(),
                     nullptr, 0);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (uint8_t b : h) {
    out.push_back(kHex[b >> 4]);
    out.push_back(kHex[b & 15]);
  }
  return out;
}

Transcript::Transcript() : start_(std::chrono::steady_clock::now()) {}

Transcript::Transcript(const Transcript& other) {
  std::lock_guard<std::mutex> lock(other.mu_);
  start_ = other.start_;
  records_ = other.records_;
}

Transcript& Transcript::operator=(const Transcript& other) {
  if (this == &other) return *this;
  std::vector<TranscriptRecord> copy;
  std::chrono::steady_clock::time_point start;
  {
    std::lock_guard<std::mutex> lock(other.mu_);
    copy = other.records_;
    start = other.start_;
  }
  std::lock_guard<std::mutex> lock(mu_);
  records_ = std::move(copy);
  start_ = start;
  return *this;
}

void Transcript::Append(Direction direction, const Frame& frame) {
  TranscriptRecord r;
  r.direction = direction;
  r.tag = frame.tag;
  r.length = static_cast<uint32_t>(frame.wire_size());
  r.payload_hash = PayloadHash(frame.payload);
  std::lock_guard<std::mutex> lock(mu_);
  r.seq = records_.size();
  r.timestamp_us = std::chrono::duration_cast<std::chrono::microseconds>(
                       std::chrono::steady_clock::now() - start_)
                       .count();
  records_.push_back(std::move(r));
}

std::vector<TranscriptRecord> Transcript::records() const {
  std::lock_guard<std::mutex> lock(mu_);
  return records_;
}

size_t Transcript::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return records_.size();
}

size_t Transcript::RoundsOf(const std::vector<TranscriptRecord>& records) {
  size_t rounds = 0;
  bool have_last = false;
  Direction last = Direction::kAliceToBob;
  for (const auto& r : records) {
    if (r.tag == kTagHello) continue;
    if (!have_last || r.direction != last) ++rounds;
    last = r.direction;
    have_last = true;
  }
  return rounds;
}

size_t Transcript::Rounds() const {
  std::lock_guard<std::mutex> lock(mu_);
  return RoundsOf(records_);
}

size_t Transcript::Bytes(Direction direction) const {
  std::lock_guard<std::mutex> lock(mu_);
  size_t total = 0;
  for (const auto& r : records_) {
    if (r.direction == direction) total += r.length;
  }
  return total;
}

size_t Transcript::TotalBytes() const {
  return Bytes(Direction::kAliceToBob) + Bytes(Direction::kBobToAlice);
}

size_t Transcript::Count(Direction direction) const {
  std::lock_guard<std::mutex> lock(mu_);
  size_t n = 0;
  for (const auto& r : records_) n += r.direction == direction;
  return n;
}

size_t Transcript::CountTag(uint8_t tag) const {
  std::lock_guard<std::mutex> lock(mu_);
  size_t n = 0;
  for (const auto& r : records_) n += r.tag == tag;
  return n;
}

std::vector<uint32_t> Transcript::LengthsTo(Direction direction) const {
  // Frames received by Bob travel from Alice, and vice versa.
  const Direction from = direction == Direction::kAliceToBob
                             ? Direction::kBobToAlice
                             : Direction::kAliceToBob;
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<uint32_t> out;
  for (const auto& r : records_) {
    if (r.direction == from) out.push_back(r.length);
  }
  return out;
}

std::string Transcript::ToJsonLines(bool with_timestamps) const {
  std::ostringstream out;
  for (const auto& r : records()) {
    nlohmann::ordered_json j;
    j["seq"] = r.seq;
    j["direction"] = DirectionName(r.direction);
    j["tag"] = r.tag;
    j["length"] = r.length;
    j["payload_hash"] = r.payload_hash;
    if (with_timestamps) j["timestamp_us"] = r.timestamp_us;
    out << j.dump() << '\n';
  }
  return out.str();
}

Transcript Transcript::FromJsonLines(const std::string& text) {
  Transcript t;
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::kMalformedTranscript,
                "transcript line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
      fail("not valid JSON");
    }
    try {
      TranscriptRecord r;
      r.seq = j.at("seq").get<uint64_t>();
      const std::string dir = j.at("direction").get<std::string>();
      if (dir == "alice->bob") {
        r.direction = Direction::kAliceToBob;
      } else if (dir == "bob->alice") {
        r.direction = Direction::kBobToAlice;
      } else {
        fail("unknown direction '" + dir + "'");
      }
      const unsigned tag = j.at("tag").get<unsigned>();
      if (tag > 255) fail("tag out of range");
      r.tag = static_cast<uint8_t>(tag);
      r.length = j.at("length").get<uint32_t>();
      if (r.length < kFrameHeaderSize + 1) fail("length below frame minimum");
      if (j.contains("payload_hash")) {
        r.payload_hash = j.at("payload_hash").get<std::string>();
      }
      if (j.contains("timestamp_us")) {
        r.timestamp_us = j.at("timestamp_us").get<int64_t>();
      }
      if (r.seq != t.records_.size()) fail("sequence gap");
      t.records_.push_back(std::move(r));
    } catch (const nlohmann::json::exception& e) {
      fail(std::string("bad field: ") + e.what());
    }
  }
  if (!text.empty() && text.back() != '\n') {
    fail("missing final newline (truncated?)");
  }
  return t;
}

bool Transcript::SameFrames(const Transcript& other) const {
  return records() == other.records();
}

}  // namespace ptincl::transport
