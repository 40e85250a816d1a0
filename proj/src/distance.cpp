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

#include "cbcchaos/distance.hpp"

#include <algorithm>
#include <bit>

#include "cbcchaos/error.hpp"

namespace cbcchaos {

using boost::multiprecision::cpp_int;

namespace {

cpp_int pow10(unsigned e) {
  cpp_int r = 1;
  for (unsigned i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

Rational pow10_neg(unsigned q) { return Rational(cpp_int(1), pow10(q)); }

Distance::Distance(unsigned state_distance, std::vector<unsigned> block_distances,
                   unsigned bits, bool tail_exact)
    : de_(state_distance), h_(std::move(block_distances)), bits_(bits),
      tail_exact_(tail_exact) {
  if (bits == 0) throw Error("distance requires a positive block width");
  if (de_ > bits) throw Error("state distance exceeds block width");
  for (unsigned h : h_) {
    if (h > bits) throw Error("block distance exceeds block width");
  }
}

Rational Distance::message_part() const {
  // sum h_k 10^(L-k) over a common denominator 10^L.
  cpp_int numerator = 0;
  for (unsigned h : h_) numerator = numerator * 10 + h;
  return Rational(numerator * 9, pow10(static_cast<unsigned>(h_.size())) * bits_);
}

Rational Distance::value() const { return Rational(de_) + message_part(); }

Rational Distance::upper_bound() const {
  if (tail_exact_) return value();
  return value() + pow10_neg(static_cast<unsigned>(h_.size()));
}

bool Distance::below_pow10(int q) const {
  if (q < 0) throw Error("epsilon exponent must be non-negative");
  return upper_bound() < pow10_neg(static_cast<unsigned>(q));
}

bool Distance::at_least(const Rational& threshold) const {
  return value() >= threshold;
}

std::string Distance::to_decimal(unsigned digits) const {
  const Rational scaled = value() * Rational(pow10(digits));
  const cpp_int truncated = numerator(scaled) / denominator(scaled);
  std::string text = truncated.str();
  if (digits == 0) return text;
  if (text.size() <= digits) text.insert(0, digits + 1 - text.size(), '0');
  text.insert(text.size() - digits, ".");
  return text;
}

namespace {

Distance compute(const PhasePoint& p, const PhasePoint& q, std::size_t horizon,
                 bool exact) {
  if (p.state.size() != q.state.size()) {
    throw Error("cannot measure distance between blocks of width " +
                std::to_string(p.state.bits()) + " and " +
                std::to_string(q.state.bits()));
  }
  const BlockSize size = p.state.size();
  const unsigned de =
      static_cast<unsigned>(std::popcount(p.state.value() ^ q.state.value()));
  std::vector<unsigned> h(horizon);
  for (std::size_t k = 0; k < horizon; ++k) {
    const std::uint32_t a = p.message.at(k);
    const std::uint32_t b = q.message.at(k);
    if (a > size.mask() || b > size.mask()) {
      throw Error("message label does not fit in an n-bit block");
    }
    h[k] = static_cast<unsigned>(std::popcount(a ^ b));
  }
  return Distance(de, std::move(h), size.bits(), exact);
}

}  // namespace

Distance distance(const PhasePoint& p, const PhasePoint& q) {
  return compute(p, q, std::max(p.message.size(), q.message.size()), true);
}

Distance distance_over(const PhasePoint& p, const PhasePoint& q,
                       std::size_t horizon) {
  return compute(p, q, horizon, false);
}

}  // namespace cbcchaos
