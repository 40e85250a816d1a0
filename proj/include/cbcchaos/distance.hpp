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
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cbcchaos/types.hpp"

namespace cbcchaos {

using Rational = boost::multiprecision::cpp_rational;

/// Phase-space distance
///
///   d = de + (9 / n) * sum_{k=1..L} h_k * 10^-k
///
/// where de is the Hamming distance between the states and h_k the Hamming
/// distance between the k-th message blocks (0-based block k-1). Stored as
/// integers; every comparison is exact.
///
/// When `tail_exact()` holds, both messages are zero beyond block L and the
/// value is the exact infinite sum. Otherwise blocks past L are unknown and
/// the true distance lies in [value(), value() + 10^-L].
class Distance {
 public:
  Distance(unsigned state_distance, std::vector<unsigned> block_distances,
           unsigned bits, bool tail_exact = true);

  unsigned de() const { return de_; }
  std::span<const unsigned> block_distances() const { return h_; }
  unsigned bits() const { return bits_; }
  std::size_t horizon() const { return h_.size(); }
  bool tail_exact() const { return tail_exact_; }

  /// de + d_m over the first L blocks.
  Rational value() const;
  Rational message_part() const;
  Rational upper_bound() const;

  /// d < 10^-q, decided on the upper bound when the tail is not exact.
  bool below_pow10(int q) const;
  /// d >= threshold, decided on value() (a lower bound in every case).
  bool at_least(const Rational& threshold) const;

  /// Decimal rendering truncated (not rounded) to `digits` places.
  std::string to_decimal(unsigned digits) const;

 private:
  unsigned de_;
  std::vector<unsigned> h_;
  unsigned bits_;
  bool tail_exact_;
};

/// 10^-q as an exact rational.
Rational pow10_neg(unsigned q);

/// Distance between two points of the same width. Messages are compared
/// over the longer prefix, zero-extending the shorter one, so the result is
/// exact. Labels are compared through their n-bit encodings.
Distance distance(const PhasePoint& p, const PhasePoint& q);

/// Distance over the first `horizon` message blocks only; the result
/// carries an inexact-tail flag.
Distance distance_over(const PhasePoint& p, const PhasePoint& q,
                       std::size_t horizon);

}  // namespace cbcchaos
