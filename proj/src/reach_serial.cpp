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

#include <deque>

#include "cbcchaos/reach.hpp"

namespace cbcchaos {

std::optional<std::uint64_t> VertexSet::first_missing() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != ~std::uint64_t{0}) {
      const std::uint64_t v =
          w * 64 + static_cast<std::uint64_t>(std::countr_one(words_[w]));
      if (v < size_) return v;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

VertexSet reach_serial(const TransitionGraph& g, std::uint32_t root,
                       Direction direction) {
  const std::uint64_t total = g.vertex_count();
  const auto labels = static_cast<std::uint32_t>(g.label_count());
  VertexSet visited(total);
  visited.set(root);
  std::uint64_t reached = 1;
  std::deque<std::uint32_t> queue{root};
  while (!queue.empty() && reached < total) {
    const std::uint32_t v = queue.front();
    queue.pop_front();
    for (std::uint32_t m = 0; m < labels; ++m) {
      const std::uint32_t t = direction == Direction::kForward
                                  ? g.successor(v, m)
                                  : g.predecessor(v, m);
      if (!visited.test(t)) {
        visited.set(t);
        ++reached;
        queue.push_back(t);
      }
    }
  }
  return visited;
}

}  // namespace cbcchaos
