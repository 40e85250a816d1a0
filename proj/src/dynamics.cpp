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

#include "cbcchaos/dynamics.hpp"

#include "cbcchaos/error.hpp"

namespace cbcchaos {

namespace {

void check_label(std::uint32_t label, MessageSemantics semantics, BlockSize size) {
  const std::uint64_t range = label_count(semantics, size);
  if (label >= range) {
    throw Error("label " + std::to_string(label) + " is outside [0, " +
                std::to_string(range - 1) + "] for " +
                std::string(to_string(semantics)) + " semantics");
  }
}

}  // namespace

Block apply_F(const Block& x, std::uint32_t label, MessageSemantics semantics) {
  check_label(label, semantics, x.size());
  return Block(mix(x.value(), label, semantics, x.size()), x.size());
}

PhasePoint step_G(const KeyedPermutation& cipher, const PhasePoint& p,
                  MessageSemantics semantics) {
  if (p.state.size() != cipher.size()) {
    throw Error("state width " + std::to_string(p.state.bits()) +
                " does not match cipher width " +
                std::to_string(cipher.size().bits()));
  }
  const Block mixed = apply_F(p.state, initial(p.message), semantics);
  return PhasePoint{Block(cipher.encrypt(mixed.value()), cipher.size()),
                    shift(p.message)};
}

Trajectory trajectory(const KeyedPermutation& cipher, const PhasePoint& start,
                      std::size_t steps, MessageSemantics semantics) {
  Trajectory t;
  t.points.reserve(steps + 1);
  t.ciphertext_blocks.reserve(steps);
  t.points.push_back(start);
  for (std::size_t i = 0; i < steps; ++i) {
    const PhasePoint& cur = t.points.back();
    if (cur.message.empty()) ++t.tail_labels_consumed;
    PhasePoint next = step_G(cipher, cur, semantics);
    t.ciphertext_blocks.push_back(next.state);
    t.points.push_back(std::move(next));
  }
  return t;
}

Block iterate_state(const KeyedPermutation& cipher, const PhasePoint& start,
                    std::size_t steps, MessageSemantics semantics) {
  PhasePoint cur = start;
  for (std::size_t i = 0; i < steps; ++i) cur = step_G(cipher, cur, semantics);
  return cur.state;
}

}  // namespace cbcchaos
