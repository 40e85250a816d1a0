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

#include <stdexcept>
#include <string>

namespace cbcchaos {

/// Invalid input: out-of-range blocks or labels, malformed tables or
/// bitstrings, non-permutations.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The request is well-formed but exceeds a configured size limit.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace cbcchaos
