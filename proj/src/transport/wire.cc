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

#include "ptincl/transport/wire.hpp"

#include "ptincl/error.hpp"

namespace ptincl::transport {

Writer& Writer::U8(uint8_t v) {
  out_.push_back(v);
  return *this;
}

Writer& Writer::U32(uint32_t v) {
  for (int s = 24; s >= 0; s -= 8) out_.push_back(static_cast<uint8_t>(v >> s));
  return *this;
}

Writer& Writer::U64(uint64_t v) {
  for (int s = 56; s >= 0; s -= 8) out_.push_back(static_cast<uint8_t>(v >> s));
  return *this;
}

Writer& Writer::Int(const crypto::BigInt& v, size_t width) {
  out_.push_back(v < 0 ? 1 : 0);
  const crypto::BigInt mag = abs(v);
  const std::vector<uint8_t> bytes = crypto::MagnitudeBytes(mag, width);
  U32(static_cast<uint32_t>(bytes.size()));
  out_.insert(out_.end(), bytes.begin(), bytes.end());
  return *this;
}

Writer& Writer::Ints(std::span<const crypto::BigInt> v, size_t width) {
  U32(static_cast<uint32_t>(v.size()));
  for (const auto& x : v) Int(x, width);
  return *this;
}

Writer& Writer::I64(int64_t v) { return U64(static_cast<uint64_t>(v)); }

Writer& Writer::Bytes(std::span<const uint8_t> v) {
  U32(static_cast<uint32_t>(v.size()));
  out_.insert(out_.end(), v.begin(), v.end());
  return *this;
}

Writer& Writer::String(const std::string& v) {
  return Bytes(std::span<const uint8_t>(
      reinterpret_cast<const uint8_t*>(v.data()), v.size()));
}

void Reader::Need(size_t n) const {
  if (bytes_.size() - pos_ < n) {
    throw Error(ErrorCode::kFrameDecode, "truncated payload");
  }
}

uint8_t Reader::U8() {
  Need(1);
  return bytes_[pos_++];
}

uint32_t Reader::U32() {
  Need(4);
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v = (v << 8) | bytes_[pos_++];
  return v;
}

uint64_t Reader::U64() {
  Need(8);
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | bytes_[pos_++];
  return v;
}

crypto::BigInt Reader::Int() {
  const uint8_t sign = U8();
  if (sign > 1) throw Error(ErrorCode::kFrameDecode, "bad integer sign byte");
  const uint32_t len = U32();
  Need(len);
  crypto::BigInt v = crypto::FromMagnitudeBytes(bytes_.subspan(pos_, len));
  pos_ += len;
  if (sign == 1) {
    if (v == 0) throw Error(ErrorCode::kFrameDecode, "negative zero");
    v = -v;
  }
  return v;
}

std::vector<crypto::BigInt> Reader::Ints(size_t max_count) {
  const uint32_t count = U32();
  // Every integer takes at least five bytes.
  if (count > max_count || count > (bytes_.size() - pos_) / 5) {
    throw Error(ErrorCode::kFrameDecode, "integer vector count out of range");
  }
  std::vector<crypto::BigInt> out;
  out.reserve(count);
  for (uint32_t i = 0; i < count; ++i) out.push_back(Int());
  return out;
}

int64_t Reader::I64() { return static_cast<int64_t>(U64()); }

std::vector<uint8_t> Reader::Bytes() {
  const uint32_t len = U32();
  Need(len);
  std::vector<uint8_t> out(bytes_.begin() + pos_, bytes_.begin() + pos_ + len);
  pos_ += len;
  return out;
}

std::string Reader::String() {
  const std::vector<uint8_t> b = Bytes();
  return std::string(b.begin(), b.end());
}

void Reader::End() const {
  if (!AtEnd()) throw Error(ErrorCode::kFrameDecode, "trailing payload bytes");
}

}  // namespace ptincl::transport
