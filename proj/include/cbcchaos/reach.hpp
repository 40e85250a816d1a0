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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cbcchaos/graph.hpp"

namespace cbcchaos {

/// Dense bitset over the 2^n vertices.
class VertexSet {
 public:
  explicit VertexSet(std::uint64_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  std::uint64_t size() const { return size_; }
  bool test(std::uint64_t v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void set(std::uint64_t v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }

  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
  }
  bool full() const { return count() == size_; }
  /// Smallest vertex not in the set.
  std::optional<std::uint64_t> first_missing() const;

  std::vector<std::uint64_t>& words() { return words_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::uint64_t size_;
  std::vector<std::uint64_t> words_;
};

enum class Direction { kForward, kBackward };

/// Vertices reachable from `root` (forward) or that reach `root`
/// (backward). Queue-based breadth-first search; the reference kernel.
VertexSet reach_serial(const TransitionGraph& g, std::uint32_t root,
                       Direction direction);

/// Level-synchronous bitset sweep, frontier expansion split across OpenMP
/// threads. Returns exactly the set reach_serial() returns. Falls back to a
/// single thread when built without OpenMP.
VertexSet reach_parallel(const TransitionGraph& g, std::uint32_t root,
                         Direction direction);

}  // namespace cbcchaos
