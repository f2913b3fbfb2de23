// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "ordua/bits.hpp"
#include "ordua/error.hpp"

namespace ordua {

/// A subset of a carrier {0..carrier-1}.
struct Subset {
  std::size_t carrier = 0;
  Mask members = 0;

  bool contains(std::size_t i) const { return has(members, i); }
  std::size_t size() const { return count(members); }
  std::vector<std::size_t> elements() const { return bits_of(members); }

  friend bool operator==(const Subset&, const Subset&) = default;
};

/// Duplicate-free family of subsets of a common carrier, kept sorted by bitmask value.
class SetFamily {
 public:
  SetFamily() = default;

  SetFamily(std::size_t carrier, std::vector<Mask> sets) : carrier_(carrier), sets_(std::move(sets)) {
    if (carrier_ > kMaxCarrier) fail(Errc::carrier_too_large, "set family carrier exceeds 64");
    const Mask full = full_mask(carrier_);
    for (Mask s : sets_) {
      if (!subset_of(s, full)) fail(Errc::carrier_mismatch, "set member outside carrier");
    }
    std::sort(sets_.begin(), sets_.end());
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
  }

  std::size_t carrier() const { return carrier_; }
  const std::vector<Mask>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  Mask operator[](std::size_t i) const { return sets_[i]; }

  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

  bool contains(Mask s) const { return std::binary_search(sets_.begin(), sets_.end(), s); }

  std::size_t index_of(Mask s) const {
    auto it = std::lower_bound(sets_.begin(), sets_.end(), s);
    if (it == sets_.end() || *it != s) fail(Errc::invalid_argument, "set not in family");
    return static_cast<std::size_t>(it - sets_.begin());
  }

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  std::size_t carrier_ = 0;
  std::vector<Mask> sets_;
};

/// Renders a set as "{a,b}" using the given element labels.
inline std::string format_set(Mask m, const std::vector<std::string>& labels) {
  std::string out = "{";
  bool first = true;
  for_each_bit(m, [&](std::size_t i) {
    if (!first) out += ',';
    out += labels.at(i);
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace ordua
