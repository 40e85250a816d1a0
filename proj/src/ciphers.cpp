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

#include "cbcchaos/ciphers.hpp"

#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

#include "cbcchaos/error.hpp"

namespace cbcchaos {

Block KeyedPermutation::encrypt(const Block& x) const {
  if (x.size() != size_) throw Error("block width does not match cipher width");
  return Block(encrypt(x.value()), size_);
}

Block KeyedPermutation::decrypt(const Block& y) const {
  if (y.size() != size_) throw Error("block width does not match cipher width");
  return Block(decrypt(y.value()), size_);
}

KeyedPermutation identity_cipher(BlockSize size) {
  return KeyedPermutation(size, CipherKind::kIdentity, "identity");
}

KeyedPermutation negation_cipher(BlockSize size) {
  return KeyedPermutation(size, CipherKind::kNegation, "negation");
}

KeyedPermutation caesar_cipher(BlockSize size, std::int64_t shift) {
  const auto modulus = static_cast<std::int64_t>(size.count());
  const std::int64_t reduced = ((shift % modulus) + modulus) % modulus;
  KeyedPermutation c(size, CipherKind::kCaesar,
                     "caesar:" + std::to_string(reduced));
  c.key_ = static_cast<std::uint32_t>(reduced);
  return c;
}

KeyedPermutation table_cipher(BlockSize size, std::vector<std::uint32_t> table,
                              std::string name) {
  if (table.size() != size.count()) {
    throw Error("permutation table has " + std::to_string(table.size()) +
                " entries, expected " + std::to_string(size.count()));
  }
  constexpr std::uint32_t kUnset = 0xffffffffu;
  std::vector<std::uint32_t> inverse(table.size(), kUnset);
  for (std::uint32_t x = 0; x < table.size(); ++x) {
    const std::uint32_t y = table[x];
    if (y > size.mask()) {
      throw Error("permutation table value " + std::to_string(y) +
                  " at index " + std::to_string(x) + " is out of range");
    }
    if (inverse[y] != kUnset) {
      std::uint32_t missing = 0;
      // A duplicate implies at least one value never appears.
      std::vector<bool> seen(table.size());
      for (std::uint32_t v : table) seen[v] = true;
      while (seen[missing]) ++missing;
      throw Error("permutation table is not a bijection: value " +
                  std::to_string(y) + " duplicated, value " +
                  std::to_string(missing) + " missing");
    }
    inverse[y] = x;
  }
  KeyedPermutation c(size, CipherKind::kTable, "table:" + name);
  c.forward_ = std::make_shared<const std::vector<std::uint32_t>>(std::move(table));
  c.inverse_ = std::make_shared<const std::vector<std::uint32_t>>(std::move(inverse));
  return c;
}

KeyedPermutation unchecked_table_cipher(BlockSize size,
                                        std::vector<std::uint32_t> forward,
                                        std::vector<std::uint32_t> inverse,
                                        std::string name) {
  if (forward.size() != size.count() || inverse.size() != size.count()) {
    throw Error("table lengths must equal 2^n");
  }
  for (auto* t : {&forward, &inverse}) {
    for (std::uint32_t v : *t) {
      if (v > size.mask()) throw Error("table value out of range");
    }
  }
  KeyedPermutation c(size, CipherKind::kTable, "table:" + name);
  c.forward_ = std::make_shared<const std::vector<std::uint32_t>>(std::move(forward));
  c.inverse_ = std::make_shared<const std::vector<std::uint32_t>>(std::move(inverse));
  return c;
}

namespace {

constexpr unsigned kExhaustiveBijectionBits = 12;

// Returns a description of the failure on x, or empty if x passes.
std::string check_round_trip(const KeyedPermutation& c, std::uint32_t x) {
  if (c.decrypt(c.encrypt(x)) != x) return "decrypt(encrypt(x)) != x";
  if (c.encrypt(c.decrypt(x)) != x) return "encrypt(decrypt(x)) != x";
  return {};
}

}  // namespace

BijectionReport validate_bijection(const KeyedPermutation& cipher,
                                   std::uint64_t seed) {
  BijectionReport report;
  const BlockSize size = cipher.size();
  if (size.bits() <= kExhaustiveBijectionBits) {
    std::vector<bool> image(size.count());
    for (std::uint32_t x = 0; x <= size.mask(); ++x) {
      ++report.blocks_checked;
      std::string why = check_round_trip(cipher, x);
      const std::uint32_t y = cipher.encrypt(x);
      if (why.empty() && image[y]) why = "encrypt is not injective";
      image[y] = true;
      if (!why.empty()) {
        report.passed = false;
        report.violating_block = x;
        report.detail = why;
        return report;
      }
    }
    return report;
  }

  report.exhaustive = false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, size.mask());
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << kExhaustiveBijectionBits); ++i) {
    const std::uint32_t x = pick(rng);
    ++report.blocks_checked;
    std::string why = check_round_trip(cipher, x);
    if (!why.empty()) {
      report.passed = false;
      report.violating_block = x;
      report.detail = why;
      return report;
    }
  }
  return report;
}

KeyedPermutation parse_table_text(std::string_view text, std::string name,
                                  unsigned max_bits) {
  std::istringstream in{std::string(text)};
  std::string token;
  if (!(in >> token)) throw Error("permutation table is empty");
  unsigned bits = 0;
  auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), bits);
  if (ec != std::errc() || p != token.data() + token.size()) {
    throw Error("permutation table: first line must be the block size, got '" +
                token + "'");
  }
  BlockSize size(bits, max_bits);
  std::vector<std::uint32_t> table;
  table.reserve(size.count());
  while (in >> token) {
    std::uint64_t v = 0;
    auto [q, vec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (vec != std::errc() || q != token.data() + token.size()) {
      throw Error("permutation table: '" + token + "' is not a decimal value");
    }
    if (v > size.mask()) {
      throw Error("permutation table: value " + token + " out of range for n=" +
                  std::to_string(bits));
    }
    table.push_back(static_cast<std::uint32_t>(v));
  }
  return table_cipher(size, std::move(table), std::move(name));
}

KeyedPermutation load_table_file(const std::string& path, unsigned max_bits) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open permutation table '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table_text(buf.str(), path, max_bits);
}

std::string format_table_text(const KeyedPermutation& cipher) {
  std::string out = std::to_string(cipher.size().bits()) + "\n";
  for (std::uint32_t x = 0; x <= cipher.size().mask(); ++x) {
    if (x) out += ' ';
    out += std::to_string(cipher.encrypt(x));
  }
  out += '\n';
  return out;
}

KeyedPermutation parse_cipher_spec(std::string_view spec, BlockSize size) {
  if (spec == "identity") return identity_cipher(size);
  if (spec == "negation") return negation_cipher(size);
  if (spec.starts_with("caesar:")) {
    std::string_view arg = spec.substr(7);
    std::int64_t k = 0;
    auto [p, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), k);
    if (arg.empty() || ec != std::errc() || p != arg.data() + arg.size()) {
      throw Error("invalid Caesar shift '" + std::string(arg) + "'");
    }
    return caesar_cipher(size, k);
  }
  if (spec.starts_with("table:")) {
    KeyedPermutation c = load_table_file(std::string(spec.substr(6)), kHardMaxBits);
    if (c.size() != size) {
      throw Error("permutation table declares n=" +
                  std::to_string(c.size().bits()) + " but n=" +
                  std::to_string(size.bits()) + " was requested");
    }
    return c;
  }
  throw Error("unknown cipher '" + std::string(spec) +
              "' (expected identity, negation, caesar:<k> or table:<path>)");
}

}  // namespace cbcchaos
