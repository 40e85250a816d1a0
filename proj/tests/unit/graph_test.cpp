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

#include "cbcchaos/graph.hpp"

#include <random>
#include <set>

#include "gtest/gtest.h"

#include "cbcchaos/dynamics.hpp"
#include "cbcchaos/error.hpp"
#include "test_support.hpp"

namespace cbcchaos {
namespace {

constexpr auto kBit = MessageSemantics::kBitIndex;
constexpr auto kFull = MessageSemantics::kFullBlock;
constexpr auto kXor = MessageSemantics::kTrueXor;

Block b(std::uint32_t v, unsigned n) { return Block(v, BlockSize(n)); }

TEST(TransitionGraphTest, CaesarOneSuccessors) {
  const TransitionGraph g(caesar_cipher(BlockSize(2), 1), kBit);
  EXPECT_EQ(successors(g, b(0, 2)),
            (std::vector<LabeledVertex>{{0, 3}, {1, 2}}));
}

TEST(TransitionGraphTest, IdentityPredecessors) {
  const TransitionGraph g(identity_cipher(BlockSize(2)), kBit);
  EXPECT_EQ(predecessors(g, b(0, 2)),
            (std::vector<LabeledVertex>{{0, 2}, {1, 1}}));
}

TEST(TransitionGraphTest, RejectsForeignBlock) {
  const TransitionGraph g(identity_cipher(BlockSize(2)), kBit);
  EXPECT_THROW(successors(g, b(0, 3)), Error);
}

TEST(TransitionGraphTest, StructuralPropertiesExhaustive) {
  std::mt19937_64 rng(67);
  for (unsigned n = 1; n <= 5; ++n) {
    auto ciphers = testing::builtin_ciphers(n);
    ciphers.push_back(table_cipher(BlockSize(n), testing::random_permutation(n, rng)));
    for (const auto& c : ciphers) {
      for (auto sem : testing::kAllSemantics) {
        const TransitionGraph g(c, sem);
        const auto cfg = testing::oracle_config(c, sem);
        for (std::uint32_t x = 0; x < g.vertex_count(); ++x) {
          const auto succ = successors(g, b(x, n));
          ASSERT_EQ(succ.size(), g.label_count());
          std::set<std::uint32_t> targets;
          for (const auto& [m, y] : succ) {
            ASSERT_EQ(y, cfg.g(x, m));
            targets.insert(y);
            // Predecessor is the closed-form inverse of the edge.
            ASSERT_EQ(g.predecessor(y, m), x);
            const auto pred = predecessors(g, b(y, n));
            ASSERT_NE(std::find(pred.begin(), pred.end(), LabeledVertex{m, x}), pred.end());
          }
          // Distinct labels give distinct successors.
          EXPECT_EQ(targets.size(), succ.size());
          if (sem == kFull) EXPECT_EQ(targets.size(), g.vertex_count());
        }
      }
    }
  }
}

TEST(TransitionGraphTest, BitIndexEdgesEmbedInFullBlock) {
  for (unsigned n = 1; n <= 6; ++n) {
    for (const auto& c : testing::builtin_ciphers(n)) {
      const TransitionGraph bit(c, kBit), full(c, kFull);
      for (std::uint32_t x = 0; x < bit.vertex_count(); ++x) {
        for (std::uint32_t m = 0; m < n; ++m) {
          // Flipping bit m is x XOR e_m, which the full-block label ~e_m gives.
          const std::uint32_t label = ~(1u << (n - 1 - m)) & BlockSize(n).mask();
          EXPECT_EQ(bit.successor(x, m), full.successor(x, label));
        }
      }
    }
  }
}

TEST(TransitionGraphTest, XorIsFullBlockRelabelled) {
  for (unsigned n = 1; n <= 6; ++n) {
    for (const auto& c : testing::builtin_ciphers(n)) {
      const TransitionGraph x_g(c, kXor), f_g(c, kFull);
      const std::uint32_t mask = BlockSize(n).mask();
      for (std::uint32_t x = 0; x < x_g.vertex_count(); ++x) {
        for (std::uint32_t m = 0; m <= mask; ++m) {
          EXPECT_EQ(x_g.successor(x, m), f_g.successor(x, ~m & mask));
        }
      }
    }
  }
}

TEST(ConnectivityTest, CaesarTwoIsNotStronglyConnected) {
  const TransitionGraph g(caesar_cipher(BlockSize(2), 2), kBit);
  for (auto mode : {ConnectivityMode::kExplicit, ConnectivityMode::kImplicit}) {
    const auto v = strongly_connected(g, mode);
    EXPECT_FALSE(v.strongly_connected);
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_EQ(*v.witness, (UnreachablePair{0, 1, 2}));
  }
  EXPECT_EQ(strongly_connected(g, ConnectivityMode::kExplicit).scc_count, 2u);
  EXPECT_FALSE(strongly_connected(g, ConnectivityMode::kImplicit).scc_count.has_value());
}

TEST(ConnectivityTest, CaesarOneIsStronglyConnected) {
  const TransitionGraph g(caesar_cipher(BlockSize(2), 1), kBit);
  const auto v = strongly_connected(g, ConnectivityMode::kExplicit);
  EXPECT_TRUE(v.strongly_connected);
  EXPECT_FALSE(v.witness.has_value());
  EXPECT_EQ(v.scc_count, 1u);
}

TEST(ConnectivityTest, ModesAgreeWithClosureOracle) {
  std::mt19937_64 rng(71);
  for (unsigned n = 1; n <= 6; ++n) {
    auto ciphers = testing::builtin_ciphers(n);
    for (int i = 0; i < 3; ++i) {
      ciphers.push_back(table_cipher(BlockSize(n), testing::random_permutation(n, rng)));
    }
    for (const auto& c : ciphers) {
      for (auto sem : testing::kAllSemantics) {
        const TransitionGraph g(c, sem);
        const auto want = oracle::connectivity(testing::oracle_config(c, sem));
        for (auto mode : {ConnectivityMode::kExplicit, ConnectivityMode::kImplicit}) {
          const auto got = strongly_connected(g, mode);
          ASSERT_EQ(got.strongly_connected, want.strongly_connected)
              << c.descriptor() << " n=" << n << " " << to_string(sem);
          if (!want.strongly_connected) {
            ASSERT_TRUE(got.witness.has_value());
            EXPECT_EQ(got.witness->from, want.smallest_unreachable->first);
            EXPECT_EQ(got.witness->to, want.smallest_unreachable->second);
            EXPECT_EQ(got.witness->forward_reachable, want.reachable_from_witness);
          }
        }
      }
    }
  }
}

TEST(ConnectivityTest, ExplicitModeHasSizeLimit) {
  const TransitionGraph g(identity_cipher(BlockSize(13)), kBit);
  EXPECT_THROW(strongly_connected(g, ConnectivityMode::kExplicit), ResourceLimitError);
  EXPECT_TRUE(strongly_connected(g, ConnectivityMode::kImplicit).strongly_connected);
}

TEST(ConnectivityTest, ParsesModes) {
  EXPECT_EQ(parse_connectivity_mode("explicit"), ConnectivityMode::kExplicit);
  EXPECT_EQ(to_string(ConnectivityMode::kImplicit), "implicit");
  EXPECT_THROW(parse_connectivity_mode("fast"), Error);
}

TEST(FindPathTest, ShortestLabelsReplay) {
  const TransitionGraph g(identity_cipher(BlockSize(3)), kBit);
  const auto path = find_path(g, 0, 7);
  ASSERT_TRUE(path.has_value());
  EXPECT_EQ(*path, (std::vector<std::uint32_t>{0, 1, 2}));
  EXPECT_EQ(find_path(g, 5, 5), std::vector<std::uint32_t>{});
}

TEST(FindPathTest, NoPathAcrossComponents) {
  const TransitionGraph g(caesar_cipher(BlockSize(2), 2), kBit);
  EXPECT_FALSE(find_path(g, 0, 1).has_value());
  EXPECT_TRUE(find_path(g, 0, 3).has_value());
}

TEST(FindPathTest, PathsReplayThroughStepG) {
  for (const auto& c : testing::builtin_ciphers(4)) {
    for (auto sem : testing::kAllSemantics) {
      const TransitionGraph g(c, sem);
      for (std::uint32_t u = 0; u < 16; u += 3) {
        for (std::uint32_t v = 0; v < 16; v += 5) {
          const auto path = find_path(g, u, v);
          if (!path) continue;
          EXPECT_EQ(iterate_state(c, PhasePoint{b(u, 4), MessageSeq(*path)}, path->size(), sem),
                    b(v, 4));
        }
      }
    }
  }
}

TEST(EdgeTableTest, IdentityOneBit) {
  const TransitionGraph g(identity_cipher(BlockSize(1)), kBit);
  const auto rows = edge_table(g);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].x, 0u);
  EXPECT_EQ(rows[0].label, 0u);
  EXPECT_EQ(rows[0].mixed, 1u);
  EXPECT_EQ(rows[0].target, 1u);
  EXPECT_EQ(rows[1].x, 1u);
  EXPECT_EQ(rows[1].mixed, 0u);
  EXPECT_EQ(rows[1].target, 0u);
}

TEST(EdgeTableTest, CsvLayout) {
  const TransitionGraph g(caesar_cipher(BlockSize(2), 1), kBit);
  const std::string csv = edge_table_csv(g);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "x,x_bin,m,F,F_bin,g,g_bin");
  EXPECT_NE(csv.find("0,00,0,2,10,3,11\n"), std::string::npos) << csv;
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 9);
}

TEST(EdgeTableTest, RenderLimit) {
  const TransitionGraph g(identity_cipher(BlockSize(7)), kBit);
  EXPECT_THROW(edge_table(g), ResourceLimitError);
  EXPECT_THROW(export_dot(g), ResourceLimitError);
}

TEST(DotTest, DeterministicWithAllNodesAndEdges) {
  const TransitionGraph g(caesar_cipher(BlockSize(3), 1), kFull);
  const std::string dot = export_dot(g);
  EXPECT_EQ(dot, export_dot(g));
  EXPECT_EQ(dot.rfind("digraph transition_graph {", 0), 0u);
  std::size_t edges = 0, pos = 0;
  while ((pos = dot.find(" -> ", pos)) != std::string::npos) {
    ++edges;
    ++pos;
  }
  EXPECT_EQ(edges, 64u);
  EXPECT_NE(dot.find("7 [label=\"7\", tooltip=\"111\"]"), std::string::npos) << dot;
}

}  // namespace
}  // namespace cbcchaos
