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

#include "cbcchaos/distance.hpp"

#include <random>

#include "gtest/gtest.h"

#include "cbcchaos/dynamics.hpp"
#include "cbcchaos/error.hpp"
#include "test_support.hpp"

namespace cbcchaos {
namespace {

PhasePoint pt(std::uint32_t s, unsigned n, std::vector<std::uint32_t> m) {
  return PhasePoint{Block(s, BlockSize(n)), MessageSeq(std::move(m))};
}

std::vector<std::uint32_t> random_labels(std::mt19937_64& rng, std::size_t len,
                                         std::uint64_t range) {
  std::vector<std::uint32_t> out(len);
  for (auto& l : out) l = static_cast<std::uint32_t>(rng() % range);
  return out;
}

TEST(DistanceTest, IdenticalPointsAreAtZero) {
  const Distance d = distance(pt(2, 3, {1, 5, 7}), pt(2, 3, {1, 5, 7}));
  EXPECT_EQ(d.value(), 0);
  EXPECT_EQ(d.de(), 0u);
  for (unsigned h : d.block_distances()) EXPECT_EQ(h, 0u);
}

TEST(DistanceTest, StatePartIsHamming) {
  EXPECT_EQ(distance(pt(0, 2, {}), pt(3, 2, {})).value(), 2);
  EXPECT_EQ(distance(pt(0, 2, {1}), pt(3, 2, {1})).value(), 2);
}

TEST(DistanceTest, SecondBlockDifference) {
  const Distance d = distance(pt(0, 2, {0, 0}), pt(0, 2, {0, 3}));
  EXPECT_EQ(d.value(), Rational(9, 100));
  EXPECT_EQ(d.to_decimal(4), "0.0900");
  EXPECT_TRUE(d.below_pow10(1));
  EXPECT_FALSE(d.below_pow10(2));
}

TEST(DistanceTest, ZeroExtendsShorterMessage) {
  const Distance d = distance(pt(0, 2, {1}), pt(0, 2, {1, 0, 2}));
  EXPECT_EQ(d.horizon(), 3u);
  EXPECT_EQ(d.value(), Rational(9, 2) * Rational(1, 1000));
}

TEST(DistanceTest, TruncatedDecimal) {
  // 9/7 * 1/10 = 0.128571...
  EXPECT_EQ(distance(pt(0, 7, {1}), pt(0, 7, {0})).to_decimal(3), "0.128");
  EXPECT_EQ(distance(pt(0, 2, {}), pt(3, 2, {})).to_decimal(0), "2");
}

TEST(DistanceTest, InexactTailUsesUpperBound) {
  const Distance d = distance_over(pt(0, 2, {1, 1}), pt(0, 2, {1, 1}), 2);
  EXPECT_FALSE(d.tail_exact());
  EXPECT_EQ(d.value(), 0);
  EXPECT_EQ(d.upper_bound(), Rational(1, 100));
  EXPECT_TRUE(d.below_pow10(1));
  EXPECT_FALSE(d.below_pow10(2));
}

TEST(DistanceTest, RejectsWidthMismatch) {
  EXPECT_THROW(distance(pt(0, 2, {}), pt(0, 3, {})), Error);
}

TEST(DistanceTest, MatchesDefiningSumOracle) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 500; ++trial) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 9);
    const std::size_t len = rng() % 8;
    auto m1 = random_labels(rng, len, 1u << n);
    auto m2 = random_labels(rng, len, 1u << n);
    const auto s1 = static_cast<std::uint32_t>(rng() % (1u << n));
    const auto s2 = static_cast<std::uint32_t>(rng() % (1u << n));
    EXPECT_EQ(distance(pt(s1, n, m1), pt(s2, n, m2)).value(),
              oracle::distance(s1, m1, s2, m2, n));
  }
}

TEST(DistanceTest, MetricAxioms) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 6);
    auto draw = [&] {
      return pt(static_cast<std::uint32_t>(rng() % (1u << n)), n,
                random_labels(rng, rng() % 6, std::min<std::uint64_t>(3, 1u << n)));
    };
    const PhasePoint a = draw(), b = draw(), c = draw();
    const Rational ab = distance(a, b).value();
    EXPECT_EQ(ab, distance(b, a).value());
    EXPECT_EQ(ab == 0, a.state == b.state && same_sequence(a.message, b.message));
    EXPECT_LE(distance(a, c).value(), ab + distance(b, c).value());
  }
}

// Each term (9/n) h_k vanishes exactly when block k agrees, for any n.
TEST(DistanceTest, PerBlockTermVanishesIffBlocksEqual) {
  std::mt19937_64 rng(29);
  for (unsigned n : {2u, 3u, 9u}) {
    for (int trial = 0; trial < 200; ++trial) {
      auto m1 = random_labels(rng, 6, 4);
      auto m2 = random_labels(rng, 6, 4);
      const Distance d = distance(pt(0, n, m1), pt(0, n, m2));
      for (std::size_t k = 0; k < 6; ++k) {
        EXPECT_EQ(d.block_distances()[k] == 0, m1[k] == m2[k]);
      }
    }
  }
}

// When n divides 9, every term is a single decimal digit, so the literal
// k-th decimal digit is zero iff block k agrees.
TEST(DistanceTest, LiteralDecimalDigitsWhenNDividesNine) {
  std::mt19937_64 rng(31);
  for (unsigned n : {3u, 9u}) {
    for (int trial = 0; trial < 200; ++trial) {
      auto m1 = random_labels(rng, 6, 1u << n);
      auto m2 = random_labels(rng, 6, 1u << n);
      const std::string text = distance(pt(0, n, m1), pt(0, n, m2)).to_decimal(6);
      ASSERT_EQ(text.substr(0, 2), "0.");
      for (std::size_t k = 0; k < 6; ++k) {
        EXPECT_EQ(text[2 + k] == '0', m1[k] == m2[k]) << text;
      }
    }
  }
}

// For n = 2 a single differing bit contributes 4.5 * 10^-k, which spills
// into digit k + 1 even though block k + 1 agrees.
TEST(DistanceTest, LiteralDigitReadingFailsForTwoBitBlocks) {
  const std::string text = distance(pt(0, 2, {1, 0}), pt(0, 2, {0, 0})).to_decimal(2);
  EXPECT_EQ(text, "0.45");
}

// Equal states and k + 2 agreeing blocks give images within 10^-(k+1).
TEST(DistanceTest, ContinuityModulusOfStepG) {
  std::mt19937_64 rng(37);
  for (unsigned n : {2u, 3u, 4u}) {
    for (const auto& c : testing::builtin_ciphers(n)) {
      for (auto sem : testing::kAllSemantics) {
        const std::uint64_t range = label_count(sem, BlockSize(n));
        for (int trial = 0; trial < 20; ++trial) {
          const unsigned k = static_cast<unsigned>(rng() % 7);
          auto shared = random_labels(rng, k + 2, range);
          auto m1 = shared, m2 = shared;
          for (auto& l : random_labels(rng, rng() % 5, range)) m1.push_back(l);
          for (auto& l : random_labels(rng, rng() % 5, range)) m2.push_back(l);
          const auto s = static_cast<std::uint32_t>(rng() % (1u << n));
          const PhasePoint gp = step_G(c, pt(s, n, m1), sem);
          const PhasePoint gq = step_G(c, pt(s, n, m2), sem);
          EXPECT_TRUE(distance(gp, gq).below_pow10(static_cast<int>(k + 1)));
        }
      }
    }
  }
}

}  // namespace
}  // namespace cbcchaos
