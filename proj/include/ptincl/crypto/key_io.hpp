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

#ifndef PTINCL_CRYPTO_KEY_IO_HPP_
#define PTINCL_CRYPTO_KEY_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "ptincl/crypto/paillier.hpp"

namespace ptincl::crypto {

inline constexpr uint8_t kKeyFormatVersion = 1;

enum class KeyKind : uint8_t {
  kAdditivePublic = 1,
  kAdditiveSecret = 2,
};

std::vector<uint8_t> SerializePublicKey(const AdditivePublicKey& pk);
std::vector<uint8_t> SerializeKeyPair(const AdditiveKeyPair& pair);

// Both accept either kind where it makes sense: a secret file also yields
// its public part. Throws Error(kValidation) on malformed input.
AdditivePublicKey ParsePublicKey(std::span<const uint8_t> bytes);
AdditiveKeyPair ParseKeyPair(std::span<const uint8_t> bytes);

// File names used inside a key directory.
inline constexpr char kPublicKeyFile[] = "public.key";
inline constexpr char kSecretKeyFile[] = "secret.key";

// Writes both files into `dir`, which must exist. Each file is written to a
// temporary name and renamed, so a failure leaves no partial file behind.
// Throws Error(kIo).
void SaveKeyDirectory(const std::filesystem::path& dir,
                      const AdditiveKeyPair& pair);
AdditiveKeyPair LoadKeyPair(const std::filesystem::path& file);
AdditivePublicKey LoadPublicKey(const std::filesystem::path& file);

std::vector<uint8_t> ReadBinaryFile(const std::filesystem::path& file);
// `owner_only` restricts the file to mode 0600.
void WriteFileAtomic(const std::filesystem::path& file,
                     std::span<const uint8_t> bytes, bool owner_only = false);

}  // namespace ptincl::crypto

#endif  // PTINCL_CRYPTO_KEY_IO_HPP_
