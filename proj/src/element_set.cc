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

#include "cyclomat/element_set.h"

#include <sstream>

namespace cyclomat {

namespace {

void CheckUniverse(int n) {
  if (n < 0 || n > kMaxElements) {
    throw SizeCapError("ground set size " + std::to_string(n) +
                       " outside [0, " + std::to_string(kMaxElements) + "]");
  }
}

}  // namespace

ElementSet::ElementSet(int universe_size, Mask bits)
    : n_(universe_size), bits_(bits) {
  CheckUniverse(n_);
  if ((bits_ & ~FullMask(n_)) != 0) {
    throw InvalidInput("element outside ground set of size " +
                       std::to_string(n_));
  }
}

ElementSet::ElementSet(int universe_size, std::initializer_list<int> members)
    : ElementSet(universe_size,
                 std::span<const int>(members.begin(), members.size())) {}

ElementSet::ElementSet(int universe_size, std::span<const int> members)
    : n_(universe_size) {
  CheckUniverse(n_);
  for (int e : members) {
    if (e < 0 || e >= n_) {
      throw InvalidInput("element " + std::to_string(e) +
                         " outside ground set of size " + std::to_string(n_));
    }
    bits_ |= Mask{1} << e;
  }
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  check_same_universe(other);
  return (bits_ & ~other.bits_) == 0;
}

ElementSet ElementSet::with(int e) const {
  ElementSet out = *this;
  if (e < 0 || e >= n_) throw InvalidInput("element outside ground set");
  out.bits_ |= Mask{1} << e;
  return out;
}

ElementSet ElementSet::without(int e) const {
  ElementSet out = *this;
  if (e >= 0 && e < n_) out.bits_ &= ~(Mask{1} << e);
  return out;
}

std::vector<int> ElementSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (Mask m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::string ElementSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : members()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

ElementSet& ElementSet::operator|=(const ElementSet& o) {
  check_same_universe(o);
  bits_ |= o.bits_;
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& o) {
  check_same_universe(o);
  bits_ &= o.bits_;
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& o) {
  check_same_universe(o);
  bits_ &= ~o.bits_;
  return *this;
}

void ElementSet::check_same_universe(const ElementSet& o) const {
  if (n_ != o.n_) {
    throw UniverseMismatch("element sets over universes of size " +
                           std::to_string(n_) + " and " +
                           std::to_string(o.n_));
  }
}

}  // namespace cyclomat
