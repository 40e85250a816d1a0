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

#include "cbcchaos/serialize.hpp"

#include <string>

namespace cbcchaos {

namespace {

Json config_json(const Configuration& c) {
  Json j;
  j["n"] = c.bits;
  j["cipher"] = c.cipher;
  j["semantics"] = std::string(to_string(c.semantics));
  return j;
}

Json labels_json(const MessageSeq& m) { return Json(m.to_vector()); }

}  // namespace

Configuration configuration_of(const TransitionGraph& g) {
  return Configuration{g.size().bits(), g.cipher().descriptor(), g.semantics()};
}

Json to_json(const UnreachablePair& pair) {
  Json j;
  j["from"] = pair.from;
  j["to"] = pair.to;
  j["forward_reachable"] = pair.forward_reachable;
  return j;
}

Json to_json(const Distance& d) {
  Json j;
  j["state"] = d.de();
  j["message_blocks"] = Json(std::vector<unsigned>(d.block_distances().begin(),
                                                   d.block_distances().end()));
  // Two extra digits show the tail of the last 9/n-scaled term.
  j["decimal"] = d.to_decimal(static_cast<unsigned>(d.horizon()) + 2);
  j["tail_exact"] = d.tail_exact();
  return j;
}

Json to_json(const PhasePoint& p) {
  Json j;
  j["state"] = p.state.value();
  j["message"] = labels_json(p.message);
  return j;
}

Json verdict_json(const ChaosVerdict& verdict, double elapsed_ms) {
  Json j;
  j["n"] = verdict.bits;
  j["cipher"] = verdict.cipher;
  j["semantics"] = std::string(to_string(verdict.semantics));
  j["strongly_connected"] = verdict.connectivity.strongly_connected;
  j["status"] = std::string(to_string(verdict.status));
  if (verdict.connectivity.witness) {
    j["witness"] = to_json(*verdict.connectivity.witness);
  }
  if (verdict.connectivity.scc_count) {
    j["scc_count"] = *verdict.connectivity.scc_count;
  }
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

Json witness_json(const Configuration& config, ChaosStatus status,
                  const PeriodicWitness& w) {
  Json j;
  j["configuration"] = config_json(config);
  j["status"] = std::string(to_string(status));
  j["witness_type"] = "periodic";
  j["q"] = w.q;
  j["state"] = w.point.state.value();
  j["message"] = Json(w.cycle);
  j["period"] = w.period;
  j["copied_blocks"] = w.copied_blocks;
  j["path_length"] = w.path_length;
  j["distance"] = to_json(w.distance_to_anchor);
  j["replay_verified"] = w.replay_verified;
  return j;
}

Json witness_json(const Configuration& config, ChaosStatus status,
                  const TransitiveWitness& w) {
  Json j;
  j["configuration"] = config_json(config);
  j["status"] = std::string(to_string(status));
  j["witness_type"] = "transitive";
  j["q"] = w.q;
  j["state"] = w.point.state.value();
  j["message"] = labels_json(w.point.message);
  j["steps"] = w.steps;
  j["target"] = to_json(w.target);
  j["copied_blocks"] = w.copied_blocks;
  j["path_length"] = w.path_length;
  j["distance"] = to_json(w.distance_to_origin);
  j["replay_verified"] = w.replay_verified;
  return j;
}

Json witness_json(const Configuration& config, ChaosStatus status,
                  const SensitivityCertificate& c) {
  Json j;
  j["configuration"] = config_json(config);
  j["status"] = std::string(to_string(status));
  j["witness_type"] = "sensitivity";
  j["q"] = c.q;
  j["anchor"] = to_json(c.anchor);
  j["perturbed"] = to_json(c.perturbed);
  j["steps"] = c.steps;
  j["delta"] = kSensitivityDelta;
  j["initial_distance"] = to_json(c.initial_distance);
  j["final_distance"] = to_json(c.final_distance);
  j["replay_verified"] = c.replay_verified;
  return j;
}

Json failed_witness_json(const Configuration& config, std::string_view witness_type,
                         const ConnectivityVerdict& connectivity) {
  Json j;
  j["configuration"] = config_json(config);
  j["status"] = std::string(to_string(ChaosStatus::kNotStronglyConnected));
  j["witness_type"] = std::string(witness_type);
  j["replay_verified"] = false;
  if (connectivity.witness) j["connectivity_witness"] = to_json(*connectivity.witness);
  return j;
}

}  // namespace cbcchaos
