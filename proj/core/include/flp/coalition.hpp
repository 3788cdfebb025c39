// Copyright 2026 the flpgame authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLP_COALITION_HPP
#define FLP_COALITION_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "flp/rational.hpp"

namespace flp {

struct TooManyPlayers : FlpError {
  using FlpError::FlpError;
};

/// Subset of the player set {0, ..., n-1} encoded as a bitset. Players are
/// 0-based in code and printed 1-based.
class Coalition {
 public:
  Coalition() = default;
  Coalition(std::uint32_t bits, int n) : bits_(bits), n_(n) {
    if (n < 0 || n > 31) throw TooManyPlayers("player count out of range");
    if (bits >> n) throw FlpError("coalition member out of range");
  }

  static Coalition empty(int n) { return Coalition(0, n); }
  static Coalition grand(int n) { return Coalition((std::uint32_t(1) << n) - 1, n); }
  static Coalition singleton(int player, int n) {
    return Coalition(std::uint32_t(1) << player, n);
  }
  static Coalition of(std::initializer_list<int> players, int n) {
    std::uint32_t bits = 0;
    for (int p : players) bits |= std::uint32_t(1) << p;
    return Coalition(bits, n);
  }

  bool contains(int player) const { return (bits_ >> player) & 1u; }
  int size() const { return __builtin_popcount(bits_); }
  int player_count() const { return n_; }
  bool is_empty() const { return bits_ == 0; }
  bool is_grand() const { return bits_ == (std::uint32_t(1) << n_) - 1; }
  std::uint32_t bits() const { return bits_; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int p = 0; p < n_; ++p)
      if (contains(p)) out.push_back(p);
    return out;
  }

  friend bool operator==(const Coalition&, const Coalition&) = default;
  friend std::strong_ordering operator<=>(const Coalition& a, const Coalition& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint32_t bits_ = 0;
  int n_ = 0;
};

inline std::vector<Coalition> all_nonempty_coalitions(int n) {
  std::vector<Coalition> out;
  const std::uint32_t total = (std::uint32_t(1) << n) - 1;
  out.reserve(total);
  for (std::uint32_t bits = 1; bits <= total; ++bits) out.emplace_back(bits, n);
  return out;
}

inline std::vector<Coalition> proper_nonempty_coalitions(int n) {
  std::vector<Coalition> out;
  const std::uint32_t total = (std::uint32_t(1) << n) - 1;
  for (std::uint32_t bits = 1; bits < total; ++bits) out.emplace_back(bits, n);
  return out;
}

/// "{1,3}" with 1-based player labels.
inline std::string to_string(const Coalition& s) {
  std::string out = "{";
  bool first = true;
  for (int p : s.members()) {
    if (!first) out += ",";
    out += std::to_string(p + 1);
    first = false;
  }
  return out + "}";
}

}  // namespace flp

#endif  // FLP_COALITION_HPP
