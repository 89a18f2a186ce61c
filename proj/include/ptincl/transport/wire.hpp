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

#ifndef PTINCL_TRANSPORT_WIRE_HPP_
#define PTINCL_TRANSPORT_WIRE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ptincl/crypto/bigint.hpp"

namespace ptincl::transport {

// Payload serializer. Integers are a sign byte, a 4-byte big-endian
// magnitude length and the magnitude. Vectors carry a 4-byte count.
class Writer {
 public:
  Writer& U8(uint8_t v);
  Writer& U32(uint32_t v);
  Writer& U64(uint64_t v);
  // `width` left-pads the magnitude so that the encoded size does not depend
  // on the value.
  Writer& Int(const crypto::BigInt& v, size_t width = 0);
  Writer& Ints(std::span<const crypto::BigInt> v, size_t width = 0);
  Writer& I64(int64_t v);
  Writer& Bytes(std::span<const uint8_t> v);
  Writer& String(const std::string& v);

  const std::vector<uint8_t>& data() const { return out_; }
  std::vector<uint8_t> Take() { return std::move(out_); }

 private:
  std::vector<uint8_t> out_;
};

// Throws Error(kFrameDecode) on any malformed or truncated field.
class Reader {
 public:
  explicit Reader(std::span<const uint8_t> bytes) : bytes_(bytes) {}

  uint8_t U8();
  uint32_t U32();
  uint64_t U64();
  crypto::BigInt Int();
  std::vector<crypto::BigInt> Ints(size_t max_count = 1u << 20);
  int64_t I64();
  std::vector<uint8_t> Bytes();
  std::string String();

  bool AtEnd() const { return pos_ == bytes_.size(); }
  void End() const;

 private:
  void Need(size_t n) const;

  std::span<const uint8_t> bytes_;
  size_t pos_ = 0;
};

}  // namespace ptincl::transport

#endif  // PTINCL_TRANSPORT_WIRE_HPP_
