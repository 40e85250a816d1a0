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

#include "cbcchaos/reach.hpp"

#include <algorithm>

namespace cbcchaos {

namespace {

// Phase 1 of a level: every (frontier vertex, label) pair is independent.
// `visited` is read-only here, `next` only receives atomic ORs, so the
// resulting set does not depend on thread scheduling.
template <Direction kDir>
void expand_level(const TransitionGraph& g, const std::vector<std::uint32_t>& frontier,
                  const VertexSet& visited, std::vector<std::uint64_t>& next) {
  const auto width = static_cast<std::int64_t>(frontier.size());
  const auto labels = static_cast<std::int64_t>(g.label_count());
  std::uint64_t* out = next.data();

#pragma omp parallel for collapse(2) schedule(static)
  for (std::int64_t i = 0; i < width; ++i) {
    for (std::int64_t m = 0; m < labels; ++m) {
      const std::uint32_t v = frontier[static_cast<std::size_t>(i)];
      const auto label = static_cast<std::uint32_t>(m);
      const std::uint32_t t = kDir == Direction::kForward ? g.successor(v, label)
                                                          : g.predecessor(v, label);
      if (!visited.test(t)) {
        const std::uint64_t bit = std::uint64_t{1} << (t & 63);
        std::uint64_t word;
#pragma omp atomic read
        word = out[t >> 6];
        // Most targets are hit many times per level; skip the locked OR then.
        if (!(word & bit)) {
#pragma omp atomic
          out[t >> 6] |= bit;
        }
      }
    }
  }
}

template <Direction kDir>
VertexSet sweep(const TransitionGraph& g, std::uint32_t root) {
  const std::uint64_t total = g.vertex_count();
  VertexSet visited(total);
  visited.set(root);
  std::uint64_t reached = 1;

  std::vector<std::uint32_t> frontier{root};
  std::vector<std::uint64_t> next(visited.words().size());
  auto& seen = visited.words();
  const auto word_count = static_cast<std::int64_t>(seen.size());

  while (!frontier.empty() && reached < total) {
    std::fill(next.begin(), next.end(), 0);
    expand_level<kDir>(g, frontier, visited, next);

    std::uint64_t added = 0;
#pragma omp parallel for reduction(+ : added) schedule(static)
    for (std::int64_t w = 0; w < word_count; ++w) {
      const std::uint64_t fresh = next[w] & ~seen[w];
      seen[w] |= fresh;
      next[w] = fresh;
      added += static_cast<std::uint64_t>(std::popcount(fresh));
    }
    reached += added;

    // Ascending frontier order keeps the work split reproducible.
    frontier.clear();
    frontier.reserve(added);
    for (std::int64_t w = 0; w < word_count; ++w) {
      std::uint64_t bits = next[w];
      while (bits) {
        frontier.push_back(static_cast<std::uint32_t>(
            w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }
  return visited;
}

}  // namespace

VertexSet reach_parallel(const TransitionGraph& g, std::uint32_t root,
                         Direction direction) {
  return direction == Direction::kForward ? sweep<Direction::kForward>(g, root)
                                          : sweep<Direction::kBackward>(g, root);
}

}  // namespace cbcchaos
