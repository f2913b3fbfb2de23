// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <tuple>
#include <vector>

#include "ordua/bits.hpp"
#include "ordua/poset.hpp"
#include "ordua/set_family.hpp"

namespace ordua {

namespace detail {

// Invariants preserved by order isomorphisms of a preorder.
struct Signature {
  std::size_t ups = 0;
  std::size_t downs = 0;
  std::size_t covers_up = 0;
  std::size_t covers_down = 0;
  auto operator<=>(const Signature&) const = default;
};

inline std::vector<Signature> signatures(const Relation& r) {
  std::vector<Signature> out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    out[i].ups = count(r.up(i));
    out[i].downs = count(r.down(i));
  }
  for (auto [a, b] : r.covers()) {
    ++out[a].covers_up;
    ++out[b].covers_down;
  }
  return out;
}

}  // namespace detail

/// Searches for a bijection phi with a R b <=> phi(a) S phi(b), subject to an optional extra
/// acceptance test on complete candidates. Returns phi as a vector (source index -> target index).
inline std::optional<std::vector<std::size_t>> find_order_isomorphism(
    const Relation& r, const Relation& s,
    const std::function<bool(const std::vector<std::size_t>&)>& accept = nullptr) {
  const std::size_t n = r.size();
  if (s.size() != n) return std::nullopt;
  auto sr = detail::signatures(r);
  auto ss = detail::signatures(s);
  {
    auto a = sr;
    auto b = ss;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  // Most constrained first: larger down-sets tend to fix structure early.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(sr[a].downs, sr[a].ups) < std::tie(sr[b].downs, sr[b].ups);
  });

  std::vector<std::size_t> phi(n, 0);
  Mask used = 0;
  std::function<bool(std::size_t)> place = [&](std::size_t depth) -> bool {
    if (depth == n) return !accept || accept(phi);
    std::size_t x = order[depth];
    for (std::size_t y = 0; y < n; ++y) {
      if (has(used, y) || !(sr[x] == ss[y])) continue;
      bool ok = r.test(x, x) == s.test(y, y);
      for (std::size_t k = 0; k < depth && ok; ++k) {
        std::size_t z = order[k];
        ok = r.test(x, z) == s.test(y, phi[z]) && r.test(z, x) == s.test(phi[z], y);
      }
      if (!ok) continue;
      phi[x] = y;
      used |= bit(y);
      if (place(depth + 1)) return true;
      used &= ~bit(y);
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return phi;
}

inline std::optional<std::vector<std::size_t>> find_order_isomorphism(const Poset& a, const Poset& b) {
  return find_order_isomorphism(a.leq(), b.leq());
}

inline bool is_order_isomorphism(const Relation& r, const Relation& s, const std::vector<std::size_t>& phi) {
  if (r.size() != s.size() || phi.size() != r.size()) return false;
  Mask seen = 0;
  for (std::size_t v : phi) {
    if (v >= s.size() || has(seen, v)) return false;
    seen |= bit(v);
  }
  for (std::size_t a = 0; a < r.size(); ++a) {
    for (std::size_t b = 0; b < r.size(); ++b) {
      if (r.test(a, b) != s.test(phi[a], phi[b])) return false;
    }
  }
  return true;
}

/// Image of a point set under a point map.
inline Mask map_set(Mask m, const std::vector<std::size_t>& phi) {
  Mask out = 0;
  for_each_bit(m, [&](std::size_t i) { out |= bit(phi[i]); });
  return out;
}

/// Restriction of a relation to the points selected by `within`, reindexed in increasing order.
inline Relation restrict(const Relation& r, Mask within) {
  auto idx = bits_of(within);
  Relation out(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (r.test(idx[i], idx[j])) out.set(i, j);
    }
  }
  return out;
}

/// Inclusion order on the members of a family.
inline Relation inclusion_relation(const std::vector<Mask>& sets) {
  Relation r(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (subset_of(sets[i], sets[j])) r.set(i, j);
    }
  }
  return r;
}

}  // namespace ordua
