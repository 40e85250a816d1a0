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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cbcchaos/ciphers.hpp"
#include "cbcchaos/dynamics.hpp"
#include "cbcchaos/types.hpp"

namespace cbcchaos {

/// Largest n for which the explicit (materialised) SCC mode runs.
inline constexpr unsigned kExplicitMaxBits = 12;
/// Largest n for edge tables and DOT export.
inline constexpr unsigned kRenderMaxBits = 6;

/// Implicit labelled digraph on all 2^n blocks: x --m--> encrypt(mix(x, m)).
/// Every vertex has one out-edge per label, and distinct labels from the
/// same vertex reach distinct targets.
class TransitionGraph {
 public:
  TransitionGraph(KeyedPermutation cipher, MessageSemantics semantics);

  const KeyedPermutation& cipher() const { return cipher_; }
  MessageSemantics semantics() const { return semantics_; }
  BlockSize size() const { return cipher_.size(); }
  std::uint64_t vertex_count() const { return cipher_.size().count(); }
  std::uint64_t label_count() const { return labels_; }

  std::uint32_t successor(std::uint32_t x, std::uint32_t label) const {
    return cipher_.encrypt(mix(x, label, semantics_, cipher_.size()));
  }
  /// The unique x with successor(x, label) == y. Each mix variant is an
  /// involution in x for fixed label, so x = mix(decrypt(y), label).
  std::uint32_t predecessor(std::uint32_t y, std::uint32_t label) const {
    return mix(cipher_.decrypt(y), label, semantics_, cipher_.size());
  }

 private:
  KeyedPermutation cipher_;
  MessageSemantics semantics_;
  std::uint64_t labels_;
};

struct LabeledVertex {
  std::uint32_t label;
  std::uint32_t vertex;

  friend bool operator==(const LabeledVertex&, const LabeledVertex&) = default;
};

/// (label, target) for every label, ascending by label.
std::vector<LabeledVertex> successors(const TransitionGraph& g, const Block& x);
/// (label, source) pairs with successor(source, label) == y, ascending by label.
std::vector<LabeledVertex> predecessors(const TransitionGraph& g, const Block& y);

enum class ConnectivityMode { kExplicit, kImplicit };

std::string_view to_string(ConnectivityMode mode);
ConnectivityMode parse_connectivity_mode(std::string_view text);

/// A pair (from, to) with no directed path from -> to. It is the
/// lexicographically smallest such pair.
struct UnreachablePair {
  std::uint32_t from;
  std::uint32_t to;
  /// Size of the set reachable from `from`, including `from`.
  std::uint64_t forward_reachable;

  friend bool operator==(const UnreachablePair&, const UnreachablePair&) = default;
};

struct ConnectivityVerdict {
  bool strongly_connected = false;
  std::optional<UnreachablePair> witness;  ///< present iff not strongly connected
  std::optional<std::uint64_t> scc_count;  ///< explicit mode only
};

/// Decides strong connectivity.
///
/// kExplicit materialises all edges (n <= 12), runs Tarjan's SCC algorithm
/// and derives the witness from breadth-first sweeps over the stored edges.
/// kImplicit sweeps forward from vertex 0 and backward into vertex 0 using
/// the closed-form predecessors; the graph is strongly connected iff both
/// sweeps cover every vertex.
///
/// Throws ResourceLimitError when n exceeds the mode's limit.
ConnectivityVerdict strongly_connected(const TransitionGraph& g,
                                       ConnectivityMode mode);

/// Shortest label sequence driving `from` to `to`. Breadth-first, labels
/// tried in ascending order. std::nullopt when `to` is unreachable.
std::optional<std::vector<std::uint32_t>> find_path(const TransitionGraph& g,
                                                    std::uint32_t from,
                                                    std::uint32_t to);

struct EdgeRow {
  std::uint32_t x;
  std::uint32_t label;
  std::uint32_t mixed;   ///< F value
  std::uint32_t target;  ///< g value
};

/// Rows ordered by (x, label). Throws ResourceLimitError for n > 6.
std::vector<EdgeRow> edge_table(const TransitionGraph& g);
/// CSV with header x,x_bin,m,F,F_bin,g,g_bin.
std::string edge_table_csv(const TransitionGraph& g);
/// Graphviz digraph, one node per block and one edge per (x, m).
std::string export_dot(const TransitionGraph& g);

}  // namespace cbcchaos
