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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cbcchaos/ciphers.hpp"
#include "cbcchaos/types.hpp"

namespace cbcchaos {

// Reference CBC codec over n-bit blocks.
//   c_0 = E(m_0 ^ iv), c_i = E(m_i ^ c_{i-1})
//   m_0 = D(c_0) ^ iv, m_i = D(c_i) ^ c_{i-1}
std::vector<Block> cbc_encrypt(const KeyedPermutation& cipher, const Block& iv,
                               std::span<const Block> plaintext);
std::vector<Block> cbc_decrypt(const KeyedPermutation& cipher, const Block& iv,
                               std::span<const Block> ciphertext);

/// Bitstring as ASCII '0'/'1', leftmost bit first.
using BitString = std::string;

/// Accepts "0101..." or "hex:<digits>/<bit length>"; the hex form keeps the
/// leading <bit length> bits of the digits' expansion. Throws Error.
BitString parse_bitstring(std::string_view text);

/// Comma-separated decimal values, each checked against `max_value`.
/// The empty string yields an empty list.
std::vector<std::uint32_t> parse_label_list(std::string_view text,
                                            std::uint64_t max_value);

std::vector<Block> to_blocks(const std::vector<std::uint32_t>& values,
                             BlockSize size);

/// Splits a bitstring whose length is a multiple of n into blocks.
std::vector<Block> bits_to_blocks(const BitString& bits, BlockSize size);
BitString blocks_to_bits(std::span<const Block> blocks);

/// Appends a single 1 bit and then as few 0 bits as needed to complete the
/// last block. Every message is padded, so a full-length input gains a whole
/// padding block.
std::vector<Block> pad(const BitString& bits, BlockSize size);
/// Strips the trailing "10*" suffix. Throws Error when the content is all
/// zeros or the block list is empty.
BitString unpad(std::span<const Block> blocks);

struct CbcEquivalenceReport {
  /// Only TRUE_XOR semantics realises literal CBC chaining.
  bool applicable = true;
  bool equal = true;
  std::optional<std::size_t> first_divergence;
  std::string detail;
};

/// Runs the dynamical system from (iv, plaintext) for len(plaintext) steps
/// and compares the emitted states with cbc_encrypt().
CbcEquivalenceReport verify_cbc_equivalence(
    const KeyedPermutation& cipher, const Block& iv,
    std::span<const Block> plaintext,
    MessageSemantics semantics = MessageSemantics::kTrueXor);

}  // namespace cbcchaos
