// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ordua {

/// Bitmask over a carrier of at most 64 elements; bit i set means element i is a member.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxCarrier = 64;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

constexpr Mask full_mask(std::size_t n) {
  return n >= 64 ? ~Mask{0} : (bit(n) - 1);
}

constexpr bool has(Mask m, std::size_t i) { return (m >> i) & 1U; }

constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

inline std::size_t count(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
}

inline std::vector<std::size_t> bits_of(Mask m) {
  std::vector<std::size_t> out;
  for_each_bit(m, [&](std::size_t i) { out.push_back(i); });
  return out;
}

/// Growable bitset for families over more than 64 ground elements (the closure oracle).
class DynBits {
 public:
  DynBits() = default;
  explicit DynBits(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { words_[i / 64] |= bit(i % 64); }

  std::size_t count() const {
    std::size_t c = 0;
    for (Mask w : words_) c += ordua::count(w);
    return c;
  }
  bool subset_of(const DynBits& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if ((words_[w] & ~o.words_[w]) != 0) return false;
    }
    return true;
  }
  DynBits& operator|=(const DynBits& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  DynBits operator&(const DynBits& o) const {
    DynBits r(n_);
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = words_[w] & o.words_[w];
    return r;
  }
  const std::vector<Mask>& words() const { return words_; }

  friend bool operator==(const DynBits&, const DynBits&) = default;
  friend auto operator<=>(const DynBits& a, const DynBits& b) {
    // Compare from the most significant word down so the order mirrors numeric bitmask order.
    for (std::size_t w = a.words_.size(); w-- > 0;) {
      if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
    }
    return a.n_ <=> b.n_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Mask> words_;
};

}  // namespace ordua
