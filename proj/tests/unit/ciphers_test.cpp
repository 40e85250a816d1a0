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

#include <filesystem>
#include <fstream>
#include <random>

#include "gtest/gtest.h"

#include "cbcchaos/error.hpp"
#include "test_support.hpp"

namespace cbcchaos {
namespace {

TEST(IdentityCipherTest, MapsEveryBlockToItself) {
  EXPECT_EQ(identity_cipher(BlockSize(2)).encrypt(3u), 3u);
  EXPECT_EQ(identity_cipher(BlockSize(4)).decrypt(11u), 11u);
  EXPECT_TRUE(validate_bijection(identity_cipher(BlockSize(8))).passed);
}

TEST(NegationCipherTest, ComplementsWithinWidth) {
  EXPECT_EQ(negation_cipher(BlockSize(2)).encrypt(0u), 3u);
  EXPECT_EQ(negation_cipher(BlockSize(3)).encrypt(5u), 2u);
  const auto c = negation_cipher(BlockSize(4));
  for (std::uint32_t x = 0; x < 16; ++x) EXPECT_EQ(c.encrypt(c.encrypt(x)), x);
}

TEST(CaesarCipherTest, AddsShiftModulo) {
  EXPECT_EQ(caesar_cipher(BlockSize(2), 1).encrypt(2u), 3u);
  EXPECT_EQ(caesar_cipher(BlockSize(2), 2).encrypt(3u), 1u);
  EXPECT_EQ(caesar_cipher(BlockSize(2), 1).decrypt(0u), 3u);
  EXPECT_EQ(caesar_cipher(BlockSize(3), -1).key(), 7u);
  EXPECT_EQ(caesar_cipher(BlockSize(3), 11).descriptor(), "caesar:3");
  const auto zero = caesar_cipher(BlockSize(3), 0);
  const auto id = identity_cipher(BlockSize(3));
  for (std::uint32_t x = 0; x < 8; ++x) EXPECT_EQ(zero.encrypt(x), id.encrypt(x));
}

TEST(CaesarCipherTest, ShiftsCompose) {
  for (unsigned n = 1; n <= 6; ++n) {
    const BlockSize size(n);
    for (std::int64_t k1 = 0; k1 < (1 << n); ++k1) {
      for (std::int64_t k2 = 0; k2 < (1 << n); k2 += 3) {
        const auto a = caesar_cipher(size, k1), b = caesar_cipher(size, k2);
        const auto ab = caesar_cipher(size, k1 + k2);
        for (std::uint32_t x = 0; x <= size.mask(); ++x) {
          ASSERT_EQ(b.encrypt(a.encrypt(x)), ab.encrypt(x));
        }
      }
    }
  }
}

TEST(TableCipherTest, OneBitSwapIsNegation) {
  const auto t = table_cipher(BlockSize(1), {1, 0});
  const auto neg = negation_cipher(BlockSize(1));
  for (std::uint32_t x = 0; x < 2; ++x) {
    EXPECT_EQ(t.encrypt(x), neg.encrypt(x));
    EXPECT_EQ(t.decrypt(x), neg.decrypt(x));
  }
}

TEST(TableCipherTest, RotationTableMatchesCaesarOne) {
  const auto t = table_cipher(BlockSize(2), {1, 2, 3, 0});
  const auto c = caesar_cipher(BlockSize(2), 1);
  for (std::uint32_t x = 0; x < 4; ++x) {
    EXPECT_EQ(t.encrypt(x), c.encrypt(x));
    EXPECT_EQ(t.decrypt(x), c.decrypt(x));
  }
}

TEST(TableCipherTest, RejectsNonPermutationNamingValues) {
  try {
    table_cipher(BlockSize(2), {0, 1, 2, 2});
    FAIL() << "expected rejection";
  } catch (const Error& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("value 2 duplicated"), std::string::npos) << what;
    EXPECT_NE(what.find("value 3 missing"), std::string::npos) << what;
  }
  EXPECT_THROW(table_cipher(BlockSize(2), {0, 1, 2}), Error);
  EXPECT_THROW(table_cipher(BlockSize(2), {0, 1, 2, 4}), Error);
}

TEST(ValidateBijectionTest, BuiltinsPassUpToTenBits) {
  for (unsigned n = 1; n <= 10; ++n) {
    for (const auto& c : testing::builtin_ciphers(n)) {
      const BijectionReport r = validate_bijection(c);
      EXPECT_TRUE(r.passed) << c.descriptor() << " n=" << n;
      EXPECT_TRUE(r.exhaustive);
      EXPECT_EQ(r.blocks_checked, std::uint64_t{1} << n);
    }
  }
  EXPECT_TRUE(validate_bijection(caesar_cipher(BlockSize(10), 77)).passed);
}

TEST(ValidateBijectionTest, SamplesAboveTwelveBits) {
  const BijectionReport r = validate_bijection(caesar_cipher(BlockSize(16), 12345), 3);
  EXPECT_TRUE(r.passed);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_GE(r.blocks_checked, 4096u);
}

TEST(ValidateBijectionTest, CorruptedTableYieldsWitness) {
  // Forward table is a permutation, but the inverse sends 3 to the wrong place.
  const auto bad = unchecked_table_cipher(BlockSize(2), {1, 2, 3, 0}, {3, 0, 1, 1});
  const BijectionReport r = validate_bijection(bad);
  EXPECT_FALSE(r.passed);
  ASSERT_TRUE(r.violating_block.has_value());
  // decrypt(encrypt(2)) = decrypt(3) = 1.
  EXPECT_EQ(*r.violating_block, 2u);
}

TEST(TableFileTest, ParsesAndRejects) {
  const auto c = parse_table_text("2\n1 2 3 0\n", "rot");
  EXPECT_EQ(c.descriptor(), "table:rot");
  EXPECT_EQ(c.encrypt(3u), 0u);
  EXPECT_EQ(format_table_text(c), "2\n1 2 3 0\n");
  EXPECT_THROW(parse_table_text("2\n1 2 3\n", "short"), Error);
  EXPECT_THROW(parse_table_text("2\n1 2 3 9\n", "range"), Error);
  EXPECT_THROW(parse_table_text("2\n1 2 x 0\n", "junk"), Error);
  EXPECT_THROW(parse_table_text("", "empty"), Error);
}

TEST(TableFileTest, CipherSpecLoadsFile) {
  const auto path = std::filesystem::temp_directory_path() / "cbcchaos_table_test.txt";
  {
    std::ofstream out(path);
    out << "3\n7 6 5 4 3 2 1 0\n";
  }
  const auto c = parse_cipher_spec("table:" + path.string(), BlockSize(3));
  for (std::uint32_t x = 0; x < 8; ++x) EXPECT_EQ(c.encrypt(x), 7 - x);
  EXPECT_THROW(parse_cipher_spec("table:" + path.string(), BlockSize(4)), Error);
  std::filesystem::remove(path);
  EXPECT_THROW(parse_cipher_spec("table:/nonexistent/file", BlockSize(3)), Error);
}

TEST(CipherSpecTest, ParsesBuiltins) {
  EXPECT_EQ(parse_cipher_spec("identity", BlockSize(3)).kind(), CipherKind::kIdentity);
  EXPECT_EQ(parse_cipher_spec("negation", BlockSize(3)).kind(), CipherKind::kNegation);
  EXPECT_EQ(parse_cipher_spec("caesar:5", BlockSize(3)).key(), 5u);
  EXPECT_THROW(parse_cipher_spec("caesar:", BlockSize(3)), Error);
  EXPECT_THROW(parse_cipher_spec("caesar:1x", BlockSize(3)), Error);
  EXPECT_THROW(parse_cipher_spec("des", BlockSize(3)), Error);
}

TEST(TableCipherTest, RandomTablesAreBijective) {
  std::mt19937_64 rng(11);
  for (unsigned n = 1; n <= 10; ++n) {
    const auto c = table_cipher(BlockSize(n), testing::random_permutation(n, rng));
    EXPECT_TRUE(validate_bijection(c).passed);
  }
}

}  // namespace
}  // namespace cbcchaos
