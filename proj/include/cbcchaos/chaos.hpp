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
#include <string>
#include <string_view>
#include <vector>

#include "cbcchaos/distance.hpp"
#include "cbcchaos/error.hpp"
#include "cbcchaos/graph.hpp"

namespace cbcchaos {

/// A strongly connected transition graph makes the CBC iteration chaotic in
/// Devaney's sense (regular, transitive, sensitive). A disconnected graph
/// only means that sufficient condition fails; it is not a proof of
/// non-chaos.
enum class ChaosStatus { kChaotic, kNotStronglyConnected };

/// "CHAOTIC_BY_THEOREM_1" or "NOT_STRONGLY_CONNECTED".
std::string_view to_string(ChaosStatus status);

struct ChaosVerdict {
  ChaosStatus status;
  ConnectivityVerdict connectivity;
  std::string cipher;
  unsigned bits;
  MessageSemantics semantics;
};

ChaosVerdict chaos_verdict(const TransitionGraph& g, ConnectivityMode mode);

/// Thrown when a construction needs strong connectivity and the graph lacks
/// it. Carries the connectivity verdict with its unreachable pair.
class NotStronglyConnectedError : public Error {
 public:
  explicit NotStronglyConnectedError(ConnectivityVerdict verdict);
  const ConnectivityVerdict& verdict() const { return verdict_; }

 private:
  ConnectivityVerdict verdict_;
};

/// A point whose message is the infinite repetition of `cycle`; iterating
/// `period` times returns to it.
struct PeriodicWitness {
  PhasePoint point;  ///< state and two full copies of the cycle
  std::vector<std::uint32_t> cycle;
  std::size_t period;
  unsigned q;                   ///< epsilon = 10^-q
  std::size_t copied_blocks;    ///< q + 1 anchor blocks at the head of the cycle
  std::size_t path_length;      ///< connecting labels appended after them
  Distance distance_to_anchor;  ///< over two periods, tail bounded
  bool replay_verified;
};

/// A point within 10^-q of `from` whose `steps`-th iterate is exactly `to`.
struct TransitiveWitness {
  PhasePoint point;
  PhasePoint target;
  std::size_t steps;
  unsigned q;
  std::size_t copied_blocks;
  std::size_t path_length;
  Distance distance_to_origin;
  bool replay_verified;
};

/// A point within 10^-q of the anchor whose trajectory state differs from
/// the anchor's after `steps` iterates, at distance at least 1.
struct SensitivityCertificate {
  PhasePoint anchor;
  PhasePoint perturbed;
  std::size_t steps;
  unsigned q;
  Distance initial_distance;
  Distance final_distance;
  bool replay_verified;
};

/// Sensitivity constant used by the certificates: one differing state bit.
inline constexpr unsigned kSensitivityDelta = 1;

/// Keeps the anchor state and its first q + 1 blocks, then closes the loop
/// with the shortest path back to the anchor state. Re-verified by replay
/// through step_G before returning. Throws NotStronglyConnectedError.
PeriodicWitness make_periodic_point(const TransitionGraph& g,
                                    const PhasePoint& anchor, unsigned q);

/// Keeps `from`'s state and first q + 1 blocks, follows the shortest path
/// to `to.state`, then continues with `to.message`. Re-verified by replay.
/// Throws NotStronglyConnectedError.
TransitiveWitness make_transitive_point(const TransitionGraph& g,
                                        const PhasePoint& from,
                                        const PhasePoint& to, unsigned q);

/// Alters block q + 1 of the anchor's message. Both trajectories share
/// their first q + 1 labels, and the next step reads different labels from
/// the same state, which yields different states because each vertex's
/// out-edges have distinct targets. Needs at least two labels (fails for
/// n = 1 under bit-index semantics) and does not need strong connectivity.
SensitivityCertificate sensitivity_certificate(const TransitionGraph& g,
                                               const PhasePoint& anchor,
                                               unsigned q);

}  // namespace cbcchaos
