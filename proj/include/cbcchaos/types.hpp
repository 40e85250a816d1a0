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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cbcchaos {

/// Default upper bound on the block width. Graph work is exponential in n.
inline constexpr unsigned kDefaultMaxBits = 20;
/// Absolute ceiling: block values and label ranges must fit in 32 bits.
inline constexpr unsigned kHardMaxBits = 30;

/// Number of bits per block, validated on construction.
class BlockSize {
 public:
  /// Throws ResourceLimitError when `bits` exceeds `max_bits`, Error when
  /// `bits` is zero.
  explicit BlockSize(unsigned bits, unsigned max_bits = kDefaultMaxBits);

  unsigned bits() const { return bits_; }
  /// 2^n, the number of distinct blocks.
  std::uint64_t count() const { return std::uint64_t{1} << bits_; }
  std::uint32_t mask() const { return static_cast<std::uint32_t>(count() - 1); }

  friend bool operator==(BlockSize, BlockSize) = default;

 private:
  unsigned bits_;
};

/// An n-bit block. Bit j counts from the most-significant (leftmost) bit,
/// starting at 0; a 1-based left index i maps to j = i - 1.
class Block {
 public:
  Block(std::uint32_t value, BlockSize size);

  std::uint32_t value() const { return value_; }
  BlockSize size() const { return size_; }
  unsigned bits() const { return size_.bits(); }

  /// Bit j from the left. Throws Error when j >= n.
  bool bit(unsigned j) const;
  Block with_bit_flipped(unsigned j) const;

  /// Left-to-right bits as a vector, inverse of assemble().
  std::vector<bool> to_bits() const;
  /// "10" for Block(2, n=2).
  std::string to_binary() const;

  friend bool operator==(const Block&, const Block&) = default;

 private:
  std::uint32_t value_;
  BlockSize size_;
};

/// Builds a block from bits listed left to right.
Block assemble(std::span<const bool> bits_from_left);

inline bool bit(const Block& x, unsigned j) { return x.bit(j); }

/// Zero-padded binary rendering of `value` over `bits` positions.
std::string to_binary(std::uint32_t value, unsigned bits);

/// How a message label acts on the internal state.
enum class MessageSemantics {
  kBitIndex,   ///< label m in [0, n-1]; flips bit m of the state
  kFullBlock,  ///< label m in [0, 2^n-1]; keeps bit j iff m_j = 1, negates it otherwise
  kTrueXor,    ///< label m in [0, 2^n-1]; state XOR m, the literal CBC chaining
};

/// Size of the label alphabet for the given semantics and block width.
std::uint64_t label_count(MessageSemantics semantics, BlockSize size);

/// "bit-index", "full-block", "xor".
std::string_view to_string(MessageSemantics semantics);
/// Accepts the names produced by to_string(). Throws Error otherwise.
MessageSemantics parse_semantics(std::string_view text);

/// Finite prefix of an infinite label sequence. Every label past the prefix
/// is 0. Shifting is O(1): copies share the underlying storage.
class MessageSeq {
 public:
  MessageSeq() = default;
  explicit MessageSeq(std::vector<std::uint32_t> labels);
  MessageSeq(std::initializer_list<std::uint32_t> labels);

  /// Number of explicitly stored labels.
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  /// Label i of the infinite sequence (0 beyond the prefix).
  std::uint32_t at(std::size_t i) const {
    return i < size_ ? (*data_)[offset_ + i] : 0u;
  }
  std::span<const std::uint32_t> prefix() const;
  std::vector<std::uint32_t> to_vector() const;

  /// Drops the first label; the empty prefix stays empty.
  MessageSeq dropped_front() const;
  /// First `count` labels, zero-extended when the prefix is shorter.
  MessageSeq take(std::size_t count) const;
  /// Prefix followed by `tail`'s prefix.
  MessageSeq concat(const MessageSeq& tail) const;

  /// Exact prefix equality (lengths must match).
  friend bool operator==(const MessageSeq& a, const MessageSeq& b);

 private:
  std::shared_ptr<const std::vector<std::uint32_t>> data_;
  std::size_t offset_ = 0;
  std::size_t size_ = 0;
};

/// Equality of the infinite, zero-extended sequences.
bool same_sequence(const MessageSeq& a, const MessageSeq& b);

/// First label of the message; 0 for an empty prefix.
std::uint32_t initial(const MessageSeq& m);
/// The message without its first label.
MessageSeq shift(const MessageSeq& m);

/// Throws Error naming the first label outside the semantics' range.
void validate_labels(const MessageSeq& m, MessageSemantics semantics,
                     BlockSize size);

/// Element of the phase space: internal state and remaining message.
struct PhasePoint {
  Block state;
  MessageSeq message;

  friend bool operator==(const PhasePoint&, const PhasePoint&) = default;
};

}  // namespace cbcchaos
