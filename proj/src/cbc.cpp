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

#include "cbcchaos/cbc.hpp"

#include <cctype>
#include <charconv>

#include "cbcchaos/dynamics.hpp"
#include "cbcchaos/error.hpp"

namespace cbcchaos {

namespace {

void check_width(const Block& b, BlockSize size) {
  if (b.size() != size) {
    throw Error("block width " + std::to_string(b.bits()) +
                " does not match cipher width " + std::to_string(size.bits()));
  }
}

}  // namespace

std::vector<Block> cbc_encrypt(const KeyedPermutation& cipher, const Block& iv,
                               std::span<const Block> plaintext) {
  check_width(iv, cipher.size());
  std::vector<Block> out;
  out.reserve(plaintext.size());
  std::uint32_t chain = iv.value();
  for (const Block& m : plaintext) {
    check_width(m, cipher.size());
    chain = cipher.encrypt(m.value() ^ chain);
    out.emplace_back(chain, cipher.size());
  }
  return out;
}

std::vector<Block> cbc_decrypt(const KeyedPermutation& cipher, const Block& iv,
                               std::span<const Block> ciphertext) {
  check_width(iv, cipher.size());
  std::vector<Block> out;
  out.reserve(ciphertext.size());
  std::uint32_t chain = iv.value();
  for (const Block& c : ciphertext) {
    check_width(c, cipher.size());
    out.emplace_back(cipher.decrypt(c.value()) ^ chain, cipher.size());
    chain = c.value();
  }
  return out;
}

BitString parse_bitstring(std::string_view text) {
  if (text.starts_with("hex:")) {
    std::string_view body = text.substr(4);
    const auto slash = body.find('/');
    if (slash == std::string_view::npos) {
      throw Error("hex bitstring needs an explicit length: hex:<digits>/<bits>");
    }
    std::string_view digits = body.substr(0, slash);
    std::string_view len_text = body.substr(slash + 1);
    std::size_t length = 0;
    auto [p, ec] = std::from_chars(len_text.data(), len_text.data() + len_text.size(), length);
    if (len_text.empty() || ec != std::errc() || p != len_text.data() + len_text.size()) {
      throw Error("invalid bit length '" + std::string(len_text) + "'");
    }
    BitString expanded;
    for (char c : digits) {
      if (!std::isxdigit(static_cast<unsigned char>(c))) {
        throw Error(std::string("invalid hex digit '") + c + "'");
      }
      const int v = std::isdigit(static_cast<unsigned char>(c))
                        ? c - '0'
                        : std::tolower(static_cast<unsigned char>(c)) - 'a' + 10;
      for (int b = 3; b >= 0; --b) expanded += ((v >> b) & 1) ? '1' : '0';
    }
    if (length > expanded.size()) {
      throw Error("bit length " + std::to_string(length) + " exceeds the " +
                  std::to_string(expanded.size()) + " bits given in hex");
    }
    return expanded.substr(0, length);
  }
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error("bitstring may contain only '0' and '1', found '" +
                  std::string(1, c) + "'");
    }
  }
  return BitString(text);
}

std::vector<std::uint32_t> parse_label_list(std::string_view text,
                                            std::uint64_t max_value) {
  std::vector<std::uint32_t> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || p != item.data() + item.size()) {
      throw Error("'" + std::string(item) + "' is not a decimal value");
    }
    if (v > max_value) {
      throw Error("value " + std::to_string(v) + " exceeds maximum " +
                  std::to_string(max_value));
    }
    out.push_back(static_cast<std::uint32_t>(v));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<Block> to_blocks(const std::vector<std::uint32_t>& values,
                             BlockSize size) {
  std::vector<Block> out;
  out.reserve(values.size());
  for (std::uint32_t v : values) out.emplace_back(v, size);
  return out;
}

std::vector<Block> bits_to_blocks(const BitString& bits, BlockSize size) {
  const unsigned n = size.bits();
  if (bits.size() % n != 0) {
    throw Error("bitstring length " + std::to_string(bits.size()) +
                " is not a multiple of the block size " + std::to_string(n));
  }
  std::vector<Block> out;
  for (std::size_t i = 0; i < bits.size(); i += n) {
    std::uint32_t v = 0;
    for (unsigned j = 0; j < n; ++j) {
      const char c = bits[i + j];
      if (c != '0' && c != '1') throw Error("bitstring contains non-binary digit");
      v = (v << 1) | (c == '1' ? 1u : 0u);
    }
    out.emplace_back(v, size);
  }
  return out;
}

BitString blocks_to_bits(std::span<const Block> blocks) {
  BitString out;
  for (const Block& b : blocks) out += b.to_binary();
  return out;
}

std::vector<Block> pad(const BitString& bits, BlockSize size) {
  BitString padded = parse_bitstring(bits);
  padded += '1';
  const unsigned n = size.bits();
  while (padded.size() % n != 0) padded += '0';
  return bits_to_blocks(padded, size);
}

BitString unpad(std::span<const Block> blocks) {
  if (blocks.empty()) throw Error("cannot unpad an empty block list");
  BitString bits = blocks_to_bits(blocks);
  const auto last_one = bits.find_last_of('1');
  if (last_one == BitString::npos) {
    throw Error("malformed padding: no terminating 1 bit");
  }
  // The padding never spans more than one block.
  if (bits.size() - last_one > blocks.front().bits()) {
    throw Error("malformed padding: more than a block of trailing zeros");
  }
  bits.resize(last_one);
  return bits;
}

CbcEquivalenceReport verify_cbc_equivalence(const KeyedPermutation& cipher,
                                            const Block& iv,
                                            std::span<const Block> plaintext,
                                            MessageSemantics semantics) {
  CbcEquivalenceReport report;
  report.applicable = semantics == MessageSemantics::kTrueXor;

  std::vector<std::uint32_t> labels;
  labels.reserve(plaintext.size());
  for (const Block& b : plaintext) labels.push_back(b.value());
  MessageSeq message(std::move(labels));
  try {
    validate_labels(message, semantics, cipher.size());
  } catch (const Error& e) {
    report.equal = false;
    report.detail = std::string("not applicable: ") + e.what();
    return report;
  }

  const Trajectory t =
      trajectory(cipher, PhasePoint{iv, message}, plaintext.size(), semantics);
  const std::vector<Block> reference = cbc_encrypt(cipher, iv, plaintext);
  for (std::size_t i = 0; i < reference.size(); ++i) {
    if (t.ciphertext_blocks[i] != reference[i]) {
      report.equal = false;
      report.first_divergence = i;
      report.detail = "block " + std::to_string(i) + ": trajectory state " +
                      std::to_string(t.ciphertext_blocks[i].value()) +
                      ", CBC ciphertext " + std::to_string(reference[i].value());
      break;
    }
  }
  if (!report.applicable && report.detail.empty()) {
    report.detail = "semantics is not literal CBC chaining";
  }
  return report;
}

}  // namespace cbcchaos
