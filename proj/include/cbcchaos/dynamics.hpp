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
#include <cstdint>
#include <vector>

#include "cbcchaos/ciphers.hpp"
#include "cbcchaos/types.hpp"

namespace cbcchaos {

/// Mixing step applied before encryption, with the inner function fixed to
/// vectorial negation. No range check on `label`.
///   kFullBlock: keep bit j where label_j = 1, negate it where label_j = 0,
///               i.e. x XOR ~label
///   kBitIndex:  flip bit `label` (counted from the left)
///   kTrueXor:   x XOR label
inline std::uint32_t mix(std::uint32_t x, std::uint32_t label,
                         MessageSemantics semantics, BlockSize size) {
  switch (semantics) {
    case MessageSemantics::kFullBlock: return x ^ (~label & size.mask());
    case MessageSemantics::kBitIndex: return x ^ (1u << (size.bits() - 1 - label));
    case MessageSemantics::kTrueXor: return x ^ label;
  }
  return x;
}

/// Checked form of mix(). Throws Error when the label is out of range.
Block apply_F(const Block& x, std::uint32_t label, MessageSemantics semantics);

/// One iterate: (encrypt(mix(state, initial(message))), shift(message)).
PhasePoint step_G(const KeyedPermutation& cipher, const PhasePoint& p,
                  MessageSemantics semantics);

struct Trajectory {
  std::vector<PhasePoint> points;        ///< X^0 .. X^T
  std::vector<Block> ciphertext_blocks;  ///< states of X^1 .. X^T
  /// Number of iterates that read past the message prefix (zero labels).
  std::size_t tail_labels_consumed = 0;

  bool consumed_tail() const { return tail_labels_consumed > 0; }
};

Trajectory trajectory(const KeyedPermutation& cipher, const PhasePoint& start,
                      std::size_t steps, MessageSemantics semantics);

/// State after `steps` iterates, without recording the intermediate points.
Block iterate_state(const KeyedPermutation& cipher, const PhasePoint& start,
                    std::size_t steps, MessageSemantics semantics);

}  // namespace cbcchaos
