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

#include "cbcchaos/chaos.hpp"

#include <algorithm>
#include <stdexcept>

#include "cbcchaos/dynamics.hpp"

namespace cbcchaos {

std::string_view to_string(ChaosStatus status) {
  return status == ChaosStatus::kChaotic ? "CHAOTIC_BY_THEOREM_1"
                                         : "NOT_STRONGLY_CONNECTED";
}

ChaosVerdict chaos_verdict(const TransitionGraph& g, ConnectivityMode mode) {
  ConnectivityVerdict connectivity = strongly_connected(g, mode);
  const ChaosStatus status = connectivity.strongly_connected
                                 ? ChaosStatus::kChaotic
                                 : ChaosStatus::kNotStronglyConnected;
  return ChaosVerdict{status, std::move(connectivity), g.cipher().descriptor(),
                      g.size().bits(), g.semantics()};
}

namespace {

std::string describe_pair(const ConnectivityVerdict& v) {
  if (!v.witness) return "transition graph is not strongly connected";
  return "transition graph is not strongly connected: no path from " +
         std::to_string(v.witness->from) + " to " + std::to_string(v.witness->to);
}

void check_point(const TransitionGraph& g, const PhasePoint& p) {
  if (p.state.size() != g.size()) {
    throw Error("point state has width " + std::to_string(p.state.bits()) +
                ", graph has width " + std::to_string(g.size().bits()));
  }
  validate_labels(p.message, g.semantics(), g.size());
}

void require_strongly_connected(const TransitionGraph& g) {
  ConnectivityVerdict v = strongly_connected(g, ConnectivityMode::kImplicit);
  if (!v.strongly_connected) throw NotStronglyConnectedError(std::move(v));
}

// Labels driving `from` to `to`; strong connectivity guarantees one exists.
std::vector<std::uint32_t> connecting_path(const TransitionGraph& g,
                                           std::uint32_t from, std::uint32_t to) {
  auto path = find_path(g, from, to);
  if (!path) throw std::logic_error("strongly connected graph lacks a path");
  return *path;
}

MessageSeq repeat(const std::vector<std::uint32_t>& cycle, std::size_t copies) {
  std::vector<std::uint32_t> labels;
  labels.reserve(cycle.size() * copies);
  for (std::size_t i = 0; i < copies; ++i) {
    labels.insert(labels.end(), cycle.begin(), cycle.end());
  }
  return MessageSeq(std::move(labels));
}

}  // namespace

NotStronglyConnectedError::NotStronglyConnectedError(ConnectivityVerdict verdict)
    : Error(describe_pair(verdict)), verdict_(std::move(verdict)) {}

PeriodicWitness make_periodic_point(const TransitionGraph& g,
                                    const PhasePoint& anchor, unsigned q) {
  check_point(g, anchor);
  require_strongly_connected(g);
  const KeyedPermutation& cipher = g.cipher();
  const MessageSemantics sem = g.semantics();

  const std::size_t copied = std::size_t{q} + 1;
  const MessageSeq head = anchor.message.take(copied);
  const Block reached = iterate_state(cipher, PhasePoint{anchor.state, head}, copied, sem);
  const std::vector<std::uint32_t> path =
      connecting_path(g, reached.value(), anchor.state.value());

  std::vector<std::uint32_t> cycle = head.to_vector();
  cycle.insert(cycle.end(), path.begin(), path.end());
  const std::size_t period = cycle.size();

  PhasePoint point{anchor.state, repeat(cycle, 2)};

  // Replay: after one period the state is back and one full copy remains.
  PhasePoint cur = point;
  for (std::size_t i = 0; i < period; ++i) cur = step_G(cipher, cur, sem);
  const bool returns = cur.state == point.state && cur.message == MessageSeq(cycle);

  // The witness message is periodic forever, so compare over enough copies
  // to cover the anchor prefix and bound the remainder.
  const std::size_t horizon = std::max(anchor.message.size(), 2 * period);
  const PhasePoint long_point{anchor.state,
                              repeat(cycle, (horizon + period - 1) / period)};
  Distance d = distance_over(long_point, anchor, horizon);
  const bool close = d.below_pow10(static_cast<int>(q));

  if (!returns || !close) {
    throw std::logic_error("periodic witness failed replay verification");
  }
  return PeriodicWitness{std::move(point), std::move(cycle), period, q, copied,
                         path.size(), std::move(d), true};
}

TransitiveWitness make_transitive_point(const TransitionGraph& g,
                                        const PhasePoint& from,
                                        const PhasePoint& to, unsigned q) {
  check_point(g, from);
  check_point(g, to);
  require_strongly_connected(g);
  const KeyedPermutation& cipher = g.cipher();
  const MessageSemantics sem = g.semantics();

  const std::size_t copied = std::size_t{q} + 1;
  const MessageSeq head = from.message.take(copied);
  const Block reached = iterate_state(cipher, PhasePoint{from.state, head}, copied, sem);
  const std::vector<std::uint32_t> path =
      connecting_path(g, reached.value(), to.state.value());

  PhasePoint point{from.state, head.concat(MessageSeq(path)).concat(to.message)};
  const std::size_t steps = copied + path.size();

  PhasePoint cur = point;
  for (std::size_t i = 0; i < steps; ++i) cur = step_G(cipher, cur, sem);
  const bool hits = cur.state == to.state && same_sequence(cur.message, to.message);

  Distance d = distance(point, from);
  const bool close = d.below_pow10(static_cast<int>(q));
  if (!hits || !close) {
    throw std::logic_error("transitive witness failed replay verification");
  }
  return TransitiveWitness{std::move(point), to, steps, q, copied, path.size(),
                           std::move(d), true};
}

SensitivityCertificate sensitivity_certificate(const TransitionGraph& g,
                                               const PhasePoint& anchor,
                                               unsigned q) {
  check_point(g, anchor);
  const KeyedPermutation& cipher = g.cipher();
  const MessageSemantics sem = g.semantics();
  const std::uint64_t labels = g.label_count();
  if (labels < 2) {
    throw Error("sensitivity needs at least two message labels; " +
                std::string(to_string(sem)) + " semantics with n=" +
                std::to_string(g.size().bits()) + " has one");
  }

  const std::size_t altered = std::size_t{q} + 1;
  std::vector<std::uint32_t> perturbed_labels =
      anchor.message.take(std::max(anchor.message.size(), altered + 1)).to_vector();
  perturbed_labels[altered] =
      static_cast<std::uint32_t>((perturbed_labels[altered] + 1) % labels);
  PhasePoint perturbed{anchor.state, MessageSeq(std::move(perturbed_labels))};

  const std::size_t steps = altered + 1;
  PhasePoint a = anchor;
  PhasePoint b = perturbed;
  for (std::size_t i = 0; i < steps; ++i) {
    a = step_G(cipher, a, sem);
    b = step_G(cipher, b, sem);
  }

  Distance initial = distance(anchor, perturbed);
  Distance final_d = distance(a, b);
  const bool ok = initial.below_pow10(static_cast<int>(q)) &&
                  final_d.at_least(Rational(kSensitivityDelta));
  if (!ok) throw std::logic_error("sensitivity certificate failed replay verification");
  return SensitivityCertificate{anchor,  std::move(perturbed), steps, q,
                                std::move(initial), std::move(final_d), true};
}

}  // namespace cbcchaos
