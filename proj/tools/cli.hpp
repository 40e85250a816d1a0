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

#include <ostream>
#include <string>
#include <vector>

namespace cbcchaos::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitHypothesis = 4;

/// Environment variable raising the block-size ceiling; honoured only
/// together with --allow-large-n.
inline constexpr const char* kMaxBitsEnv = "CBCCHAOS_MAX_N";

/// Runs the command line. Data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Smallest q >= 0 with 10^-q <= epsilon, for a positive decimal string.
unsigned epsilon_exponent(const std::string& epsilon);

}  // namespace cbcchaos::cli
