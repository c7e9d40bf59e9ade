// Copyright 2026 The Authors.
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

#ifndef CYCLOMAT_ELEMENT_SET_H_
#define CYCLOMAT_ELEMENT_SET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cyclomat/errors.h"

namespace cyclomat {

using Mask = std::uint32_t;

inline constexpr int kMaxElements = 20;

inline constexpr Mask FullMask(int n) {
  return n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

inline int Popcount(Mask m) { return std::popcount(m); }

// A subset of the ground set {0, ..., n-1}, n <= kMaxElements, stored as a
// bitmask. All binary operations require both operands to share a universe.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe_size) : ElementSet(universe_size, 0) {}
  ElementSet(int universe_size, Mask bits);
  ElementSet(int universe_size, std::initializer_list<int> members);
  ElementSet(int universe_size, std::span<const int> members);

  static ElementSet Full(int universe_size) {
    return ElementSet(universe_size, FullMask(universe_size));
  }

  int universe_size() const { return n_; }
  Mask bits() const { return bits_; }
  int size() const { return Popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int e) const {
    return e >= 0 && e < n_ && ((bits_ >> e) & 1U) != 0;
  }
  bool is_subset_of(const ElementSet& other) const;

  ElementSet with(int e) const;
  ElementSet without(int e) const;
  ElementSet complement() const { return {n_, ~bits_ & FullMask(n_)}; }

  std::vector<int> members() const;
  std::string to_string() const;

  ElementSet& operator|=(const ElementSet& o);
  ElementSet& operator&=(const ElementSet& o);
  ElementSet& operator-=(const ElementSet& o);

  friend ElementSet operator|(ElementSet a, const ElementSet& b) {
    return a |= b;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) {
    return a &= b;
  }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) {
    return a -= b;
  }
  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet&, const ElementSet&) = default;

 private:
  void check_same_universe(const ElementSet& o) const;

  int n_ = 0;
  Mask bits_ = 0;
};

// Calls fn(mask) for every k-subset of the low n bits, in increasing order.
template <typename Fn>
void ForEachKSubset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(Mask{0});
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t s = (std::uint64_t{1} << k) - 1;
  while (s < limit) {
    fn(static_cast<Mask>(s));
    // Gosper's hack: next integer with the same popcount.
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

// Calls fn(sub) for every subset of `m`, including 0 and m itself.
template <typename Fn>
void ForEachSubmask(Mask m, Fn&& fn) {
  Mask sub = m;
  while (true) {
    fn(sub);
    if (sub == 0) break;
    sub = (sub - 1) & m;
  }
}

}  // namespace cyclomat

#endif  // CYCLOMAT_ELEMENT_SET_H_
