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

#include "ptincl/crypto/key_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <string>
#include <system_error>

#include "ptincl/error.hpp"

namespace ptincl::crypto {

namespace {

constexpr uint8_t kMagic[4] = {'P', 'T', 'K', 'Y'};

void PutInt(std::vector<uint8_t>& out, const BigInt& v) {
  out.push_back(v < 0 ? 1 : 0);
  const std::vector<uint8_t> mag = MagnitudeBytes(abs(v));
  const uint32_t len = static_cast<uint32_t>(mag.size());
  for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<uint8_t>(len >> s));
  out.insert(out.end(), mag.begin(), mag.end());
}

class KeyReader {
 public:
  explicit KeyReader(std::span<const uint8_t> bytes) : bytes_(bytes) {}

  KeyKind Header() {
    if (bytes_.size() < 6 || !std::equal(kMagic, kMagic + 4, bytes_.begin())) {
      Fail("bad magic");
    }
    if (bytes_[4] != kKeyFormatVersion) Fail("unsupported version");
    const uint8_t kind = bytes_[5];
    if (kind != static_cast<uint8_t>(KeyKind::kAdditivePublic) &&
        kind != static_cast<uint8_t>(KeyKind::kAdditiveSecret)) {
      Fail("unknown key kind");
    }
    pos_ = 6;
    return static_cast<KeyKind>(kind);
  }

  BigInt Int() {
    if (bytes_.size() - pos_ < 5) Fail("truncated integer");
    const uint8_t sign = bytes_[pos_];
    if (sign > 1) Fail("bad sign byte");
    uint32_t len = 0;
    for (int i = 1; i <= 4; ++i) len = (len << 8) | bytes_[pos_ + i];
    pos_ += 5;
    if (bytes_.size() - pos_ < len) Fail("truncated integer");
    BigInt v = FromMagnitudeBytes(bytes_.subspan(pos_, len));
    pos_ += len;
    return sign ? BigInt(-v) : v;
  }

  void End() {
    if (pos_ != bytes_.size()) Fail("trailing bytes");
  }

 private:
  [[noreturn]] void Fail(const std::string& what) {
    throw Error(ErrorCode::kValidation, "malformed key file: " + what);
  }

  std::span<const uint8_t> bytes_;
  size_t pos_ = 0;
};

std::vector<uint8_t> Header(KeyKind kind) {
  std::vector<uint8_t> out(kMagic, kMagic + 4);
  out.push_back(kKeyFormatVersion);
  out.push_back(static_cast<uint8_t>(kind));
  return out;
}

}  // namespace

std::vector<uint8_t> SerializePublicKey(const AdditivePublicKey& pk) {
  std::vector<uint8_t> out = Header(KeyKind::kAdditivePublic);
  PutInt(out, pk.n());
  PutInt(out, pk.plaintext_bound());
  return out;
}

std::vector<uint8_t> SerializeKeyPair(const AdditiveKeyPair& pair) {
  std::vector<uint8_t> out = Header(KeyKind::kAdditiveSecret);
  PutInt(out, pair.public_key().n());
  PutInt(out, pair.public_key().plaintext_bound());
  PutInt(out, pair.p());
  PutInt(out, pair.q());
  return out;
}

AdditivePublicKey ParsePublicKey(std::span<const uint8_t> bytes) {
  KeyReader r(bytes);
  const KeyKind kind = r.Header();
  BigInt n = r.Int();
  BigInt bound = r.Int();
  if (kind == KeyKind::kAdditiveSecret) {
    r.Int();
    r.Int();
  }
  r.End();
  if (n <= 0 || bound <= 0 || 2 * bound >= n) {
    throw Error(ErrorCode::kValidation, "malformed key file: bad parameters");
  }
  return AdditivePublicKey(std::move(n), std::move(bound));
}

AdditiveKeyPair ParseKeyPair(std::span<const uint8_t> bytes) {
  KeyReader r(bytes);
  if (r.Header() != KeyKind::kAdditiveSecret) {
    throw Error(ErrorCode::kValidation, "key file holds no secret key");
  }
  const BigInt n = r.Int();
  const BigInt bound = r.Int();
  const BigInt p = r.Int();
  const BigInt q = r.Int();
  r.End();
  if (p * q != n) {
    throw Error(ErrorCode::kValidation, "malformed key file: n != p*q");
  }
  return AdditiveKeyPair::FromPrimes(p, q, bound);
}

std::vector<uint8_t> ReadBinaryFile(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + file.string());
  return std::vector<uint8_t>(std::istreambuf_iterator<char>(in), {});
}

void WriteFileAtomic(const std::filesystem::path& file,
                     std::span<const uint8_t> bytes, bool owner_only) {
  const std::filesystem::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + file.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw Error(ErrorCode::kIo, "write failed for " + file.string());
    }
  }
  std::error_code ec;
  if (owner_only) {
    namespace fs = std::filesystem;
    fs::permissions(tmp, fs::perms::owner_read | fs::perms::owner_write,
                    fs::perm_options::replace, ec);
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::kIo, "cannot rename into " + file.string());
  }
}

void SaveKeyDirectory(const std::filesystem::path& dir,
                      const AdditiveKeyPair& pair) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error(ErrorCode::kIo, "not a directory: " + dir.string());
  }
  const std::filesystem::path secret = dir / kSecretKeyFile;
  WriteFileAtomic(secret, SerializeKeyPair(pair), true);
  try {
    WriteFileAtomic(dir / kPublicKeyFile, SerializePublicKey(pair.public_key()));
  } catch (...) {
    std::error_code ec;
    std::filesystem::remove(secret, ec);
    throw;
  }
}

AdditiveKeyPair LoadKeyPair(const std::filesystem::path& file) {
  return ParseKeyPair(ReadBinaryFile(file));
}

AdditivePublicKey LoadPublicKey(const std::filesystem::path& file) {
  return ParsePublicKey(ReadBinaryFile(file));
}

}  // namespace ptincl::crypto
