// Copyright 2026 The cbcchaos Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cbcchaos/types.hpp"

namespace cbcchaos {

enum class CipherKind { kIdentity, kNegation, kCaesar, kTable };

/// An encrypt/decrypt pair on n-bit blocks. Immutable once built; tables
/// are shared between copies.
class KeyedPermutation {
 public:
  BlockSize size() const { return size_; }
  CipherKind kind() const { return kind_; }
  /// Shift value for Caesar ciphers, reduced mod 2^n; 0 otherwise.
  std::uint32_t key() const { return key_; }
  /// "identity", "negation", "caesar:<k>" or "table:<name>".
  const std::string& descriptor() const { return descriptor_; }

  // The raw forms skip range checks; callers pass values below 2^n.
  std::uint32_t encrypt(std::uint32_t x) const {
    switch (kind_) {
      case CipherKind::kIdentity: return x;
      case CipherKind::kNegation: return ~x & size_.mask();
      case CipherKind::kCaesar: return (x + key_) & size_.mask();
      case CipherKind::kTable: return (*forward_)[x];
    }
    return x;
  }
  std::uint32_t decrypt(std::uint32_t y) const {
    switch (kind_) {
      case CipherKind::kIdentity: return y;
      case CipherKind::kNegation: return ~y & size_.mask();
      case CipherKind::kCaesar: return (y - key_) & size_.mask();
      case CipherKind::kTable: return (*inverse_)[y];
    }
    return y;
  }

  Block encrypt(const Block& x) const;
  Block decrypt(const Block& y) const;

  friend KeyedPermutation identity_cipher(BlockSize size);
  friend KeyedPermutation negation_cipher(BlockSize size);
  friend KeyedPermutation caesar_cipher(BlockSize size, std::int64_t shift);
  friend KeyedPermutation table_cipher(BlockSize size,
                                       std::vector<std::uint32_t> table,
                                       std::string name);
  friend KeyedPermutation unchecked_table_cipher(
      BlockSize size, std::vector<std::uint32_t> forward,
      std::vector<std::uint32_t> inverse, std::string name);

 private:
  KeyedPermutation(BlockSize size, CipherKind kind, std::string descriptor)
      : size_(size), kind_(kind), descriptor_(std::move(descriptor)) {}

  BlockSize size_;
  CipherKind kind_;
  std::uint32_t key_ = 0;
  std::string descriptor_;
  std::shared_ptr<const std::vector<std::uint32_t>> forward_;
  std::shared_ptr<const std::vector<std::uint32_t>> inverse_;
};

KeyedPermutation identity_cipher(BlockSize size);
/// Bitwise complement within n bits; its own inverse.
KeyedPermutation negation_cipher(BlockSize size);
/// x -> x + k mod 2^n. Any integer k is accepted and reduced.
KeyedPermutation caesar_cipher(BlockSize size, std::int64_t shift);

/// encrypt(x) = table[x]. The table must be a permutation of [0, 2^n - 1];
/// otherwise throws Error naming the first duplicated and missing values.
KeyedPermutation table_cipher(BlockSize size, std::vector<std::uint32_t> table,
                              std::string name = "inline");

/// Forward and inverse tables taken as given, without checking that they
/// are inverse bijections. Only lengths and value ranges are checked.
/// validate_bijection() is the way to audit such a pair.
KeyedPermutation unchecked_table_cipher(BlockSize size,
                                        std::vector<std::uint32_t> forward,
                                        std::vector<std::uint32_t> inverse,
                                        std::string name = "unchecked");

struct BijectionReport {
  bool passed = true;
  bool exhaustive = true;
  std::uint64_t blocks_checked = 0;
  /// First block on which the round trip or injectivity failed.
  std::optional<std::uint32_t> violating_block;
  std::string detail;
};

/// Exhaustive for n <= 12, otherwise a seeded sample of 2^12 blocks.
BijectionReport validate_bijection(const KeyedPermutation& cipher,
                                   std::uint64_t seed = 0);

/// Parses the text table format: first token n, then 2^n decimal values.
KeyedPermutation parse_table_text(std::string_view text, std::string name,
                                  unsigned max_bits = kDefaultMaxBits);
KeyedPermutation load_table_file(const std::string& path,
                                 unsigned max_bits = kDefaultMaxBits);
std::string format_table_text(const KeyedPermutation& cipher);

/// Builds a cipher from "identity", "negation", "caesar:<k>" or
/// "table:<path>". A table file must declare the same n.
KeyedPermutation parse_cipher_spec(std::string_view spec, BlockSize size);

}  // namespace cbcchaos
