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

#include <string_view>

#include "json.hpp"

#include "cbcchaos/chaos.hpp"

namespace cbcchaos {

// JSON documents with a fixed field order. docs/json-schema.md lists every
// field; nothing else is emitted.
using Json = nlohmann::ordered_json;

struct Configuration {
  unsigned bits;
  std::string cipher;
  MessageSemantics semantics;
};

Configuration configuration_of(const TransitionGraph& g);

Json to_json(const UnreachablePair& pair);
Json to_json(const Distance& d);
Json to_json(const PhasePoint& p);

/// {n, cipher, semantics, strongly_connected, status, witness?, scc_count?,
///  elapsed_ms}
Json verdict_json(const ChaosVerdict& verdict, double elapsed_ms);

Json witness_json(const Configuration& config, ChaosStatus status,
                  const PeriodicWitness& w);
Json witness_json(const Configuration& config, ChaosStatus status,
                  const TransitiveWitness& w);
Json witness_json(const Configuration& config, ChaosStatus status,
                  const SensitivityCertificate& c);
/// The document emitted when a construction needs strong connectivity.
Json failed_witness_json(const Configuration& config, std::string_view witness_type,
                         const ConnectivityVerdict& connectivity);

}  // namespace cbcchaos
