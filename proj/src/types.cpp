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

#include "cbcchaos/types.hpp"

#include <algorithm>

#include "cbcchaos/error.hpp"

namespace cbcchaos {

BlockSize::BlockSize(unsigned bits, unsigned max_bits) : bits_(bits) {
  if (bits == 0) throw Error("block size must be at least 1 bit");
  const unsigned limit = std::min(max_bits, kHardMaxBits);
  if (bits > limit) {
    throw ResourceLimitError("block size " + std::to_string(bits) +
                             " exceeds the configured maximum of " +
                             std::to_string(limit) + " bits");
  }
}

Block::Block(std::uint32_t value, BlockSize size) : value_(value), size_(size) {
  if (value > size.mask()) {
    throw Error("block value " + std::to_string(value) + " does not fit in " +
                std::to_string(size.bits()) + " bits");
  }
}

bool Block::bit(unsigned j) const {
  if (j >= bits()) {
    throw Error("bit index " + std::to_string(j) + " out of range for " +
                std::to_string(bits()) + "-bit block");
  }
  return (value_ >> (bits() - 1 - j)) & 1u;
}

Block Block::with_bit_flipped(unsigned j) const {
  if (j >= bits()) {
    throw Error("bit index " + std::to_string(j) + " out of range for " +
                std::to_string(bits()) + "-bit block");
  }
  return Block(value_ ^ (1u << (bits() - 1 - j)), size_);
}

std::vector<bool> Block::to_bits() const {
  std::vector<bool> out(bits());
  for (unsigned j = 0; j < bits(); ++j) out[j] = bit(j);
  return out;
}

std::string Block::to_binary() const { return cbcchaos::to_binary(value_, bits()); }

Block assemble(std::span<const bool> bits_from_left) {
  BlockSize size(static_cast<unsigned>(bits_from_left.size()), kHardMaxBits);
  std::uint32_t value = 0;
  for (bool b : bits_from_left) value = (value << 1) | (b ? 1u : 0u);
  return Block(value, size);
}

std::string to_binary(std::uint32_t value, unsigned bits) {
  std::string out(bits, '0');
  for (unsigned j = 0; j < bits; ++j) {
    if ((value >> (bits - 1 - j)) & 1u) out[j] = '1';
  }
  return out;
}

std::uint64_t label_count(MessageSemantics semantics, BlockSize size) {
  return semantics == MessageSemantics::kBitIndex ? size.bits() : size.count();
}

std::string_view to_string(MessageSemantics semantics) {
  switch (semantics) {
    case MessageSemantics::kBitIndex: return "bit-index";
    case MessageSemantics::kFullBlock: return "full-block";
    case MessageSemantics::kTrueXor: return "xor";
  }
  return "unknown";
}

MessageSemantics parse_semantics(std::string_view text) {
  if (text == "bit-index") return MessageSemantics::kBitIndex;
  if (text == "full-block") return MessageSemantics::kFullBlock;
  if (text == "xor") return MessageSemantics::kTrueXor;
  throw Error("unknown semantics '" + std::string(text) +
              "' (expected bit-index, full-block or xor)");
}

MessageSeq::MessageSeq(std::vector<std::uint32_t> labels)
    : data_(std::make_shared<const std::vector<std::uint32_t>>(std::move(labels))),
      size_(data_->size()) {}

MessageSeq::MessageSeq(std::initializer_list<std::uint32_t> labels)
    : MessageSeq(std::vector<std::uint32_t>(labels)) {}

std::span<const std::uint32_t> MessageSeq::prefix() const {
  if (size_ == 0) return {};
  return std::span<const std::uint32_t>(data_->data() + offset_, size_);
}

std::vector<std::uint32_t> MessageSeq::to_vector() const {
  auto p = prefix();
  return {p.begin(), p.end()};
}

MessageSeq MessageSeq::dropped_front() const {
  if (size_ == 0) return *this;
  MessageSeq out = *this;
  ++out.offset_;
  --out.size_;
  return out;
}

MessageSeq MessageSeq::take(std::size_t count) const {
  if (count <= size_) {
    MessageSeq out = *this;
    out.size_ = count;
    return out;
  }
  std::vector<std::uint32_t> labels = to_vector();
  labels.resize(count, 0u);
  return MessageSeq(std::move(labels));
}

MessageSeq MessageSeq::concat(const MessageSeq& tail) const {
  std::vector<std::uint32_t> labels = to_vector();
  auto t = tail.prefix();
  labels.insert(labels.end(), t.begin(), t.end());
  return MessageSeq(std::move(labels));
}

bool operator==(const MessageSeq& a, const MessageSeq& b) {
  auto pa = a.prefix();
  auto pb = b.prefix();
  return std::equal(pa.begin(), pa.end(), pb.begin(), pb.end());
}

bool same_sequence(const MessageSeq& a, const MessageSeq& b) {
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    if (a.at(i) != b.at(i)) return false;
  }
  return true;
}

std::uint32_t initial(const MessageSeq& m) { return m.at(0); }

MessageSeq shift(const MessageSeq& m) { return m.dropped_front(); }

void validate_labels(const MessageSeq& m, MessageSemantics semantics,
                     BlockSize size) {
  const std::uint64_t range = label_count(semantics, size);
  auto p = m.prefix();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] >= range) {
      throw Error("message label " + std::to_string(p[i]) + " at position " +
                  std::to_string(i) + " is outside [0, " +
                  std::to_string(range - 1) + "] for " +
                  std::string(to_string(semantics)) + " semantics");
    }
  }
}

}  // namespace cbcchaos
