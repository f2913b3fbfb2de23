// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ordua/bits.hpp"
#include "ordua/config.hpp"
#include "ordua/error.hpp"
#include "ordua/poset.hpp"
#include "ordua/set_family.hpp"
#include "ordua/structure.hpp"

namespace ordua {

/// Nonempty, upward closed, down-directed subsets of a finite poset. Every such subset has a
/// least element (a common lower bound of all members lies in it), so these are exactly the
/// principal up-sets. No enumeration bound applies.
inline SetFamily principal_filters(const Poset& p) {
  std::vector<Mask> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back(p.up(i));
  return SetFamily(p.size(), std::move(out));
}

inline SetFamily filters(const Structure& s, const Bounds& bounds = {}) {
  if (s.size() > bounds.enumeration) {
    fail(Errc::carrier_too_large,
         "filter enumeration on " + std::to_string(s.size()) + " elements exceeds bound " +
             std::to_string(bounds.enumeration));
  }
  return principal_filters(s.base());
}

namespace detail {

inline bool detects_joins(const Structure& s, Mask f, bool disjoint_only) {
  const std::size_t n = s.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (has(f, a)) continue;
    for (std::size_t b = a; b < n; ++b) {
      if (has(f, b)) continue;
      if (disjoint_only && !s.disjoint(a, b)) continue;
      if (has(f, s.join_of(a, b))) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Filters avoiding the bottom in which a v b forces a or b.
inline SetFamily prime_filters(const Structure& s) {
  s.require(Kind::distributive_lattice, "prime_filters");
  const std::size_t bot = s.bottom_of();
  std::vector<Mask> out;
  for (Mask f : principal_filters(s.base())) {
    if (!has(f, bot) && detail::detects_joins(s, f, false)) out.push_back(f);
  }
  return SetFamily(s.size(), std::move(out));
}

/// Filters that contain a member of every pairwise-disjoint family whose join they contain.
/// The empty family (join = bottom) keeps the bottom out; binary detection covers larger
/// families because disjoint joins distribute in a dd-lattice.
inline SetFamily disjunctive_filters(const Structure& s) {
  s.require(Kind::dd_lattice, "disjunctive_filters");
  const std::size_t bot = s.bottom_of();
  std::vector<Mask> out;
  for (Mask f : principal_filters(s.base())) {
    if (!has(f, bot) && detail::detects_joins(s, f, true)) out.push_back(f);
  }
  return SetFamily(s.size(), std::move(out));
}

/// Elements that are not the join of the elements strictly below them. The bottom is the empty
/// join and so never qualifies.
inline Subset join_irreducibles(const Structure& s) {
  const std::size_t bot = s.bottom_of();
  Mask out = 0;
  for (std::size_t d = 0; d < s.size(); ++d) {
    if (d == bot) continue;
    if (s.join_all(s.down(d) & ~bit(d)) != d) out |= bit(d);
  }
  return {s.size(), out};
}

inline Subset indecomposable_elements(const Structure& s) {
  s.require(Kind::distributive_lattice, "indecomposable_elements");
  return join_irreducibles(s);
}

/// Elements d with d <= x v y implying d <= x or d <= y, and d above the bottom. For finite
/// families this is the same as being below a member of every cover.
inline Subset supercompact_elements(const Structure& s) {
  s.require(Kind::meet_semilattice, "supercompact_elements");
  const std::size_t bot = s.bottom_of();
  Mask out = 0;
  for (std::size_t d = 0; d < s.size(); ++d) {
    if (d == bot) continue;
    bool ok = true;
    for (std::size_t x = 0; x < s.size() && ok; ++x) {
      for (std::size_t y = x; y < s.size() && ok; ++y) {
        if (s.leq(d, s.join_of(x, y)) && !s.leq(d, x) && !s.leq(d, y)) ok = false;
      }
    }
    if (ok) out |= bit(d);
  }
  return {s.size(), out};
}

namespace detail {

// Is there a pairwise-disjoint family drawn from `allowed` joining to exactly `target`?
inline bool disjoint_family_reaches(const Structure& s, const std::vector<std::size_t>& allowed, std::size_t from,
                                    Mask chosen, std::size_t join, std::size_t target) {
  if (join == target) return true;
  for (std::size_t k = from; k < allowed.size(); ++k) {
    std::size_t x = allowed[k];
    if (s.leq(x, join)) continue;
    bool disjoint = true;
    for_each_bit(chosen, [&](std::size_t c) { disjoint = disjoint && s.disjoint(c, x); });
    if (!disjoint) continue;
    if (disjoint_family_reaches(s, allowed, k + 1, chosen | bit(x), s.join_of(join, x), target)) return true;
  }
  return false;
}

// Enumerates antichain covers of `d` drawn from `pool` (elements strictly below d); calls
// `visit(cover)` on each and stops early when it returns false.
template <class Visit>
bool for_each_cover(const Structure& s, const std::vector<std::size_t>& pool, std::size_t from, Mask chosen,
                    std::size_t join, std::size_t d, Visit& visit) {
  if (chosen != 0 && join == d) return visit(chosen);
  for (std::size_t k = from; k < pool.size(); ++k) {
    std::size_t x = pool[k];
    bool comparable = false;
    for_each_bit(chosen, [&](std::size_t c) { comparable = comparable || s.leq(c, x) || s.leq(x, c); });
    if (comparable) continue;
    if (!for_each_cover(s, pool, k + 1, chosen | bit(x), s.join_of(join, x), d, visit)) return false;
  }
  return true;
}

}  // namespace detail

/// Whether d is disjunctively compact relative to the sub-collection `within` (which must
/// contain d): every cover of d by members of `within` admits a pairwise-disjoint refinement by
/// members of `within` with the same join.
inline bool disjunctively_compact_within(const Structure& s, Mask within, std::size_t d) {
  const std::size_t bot = s.bottom_of();
  if (d == bot) return true;  // the empty family refines every cover
  std::vector<std::size_t> pool;
  for_each_bit(within & s.down(d), [&](std::size_t x) {
    if (x != d && x != bot) pool.push_back(x);
  });
  // Covers containing d are refined by {d}; only antichain covers strictly below d matter, and
  // the refinement may use anything below some cover member.
  auto visit = [&](Mask cover) {
    Mask below = 0;
    for_each_bit(cover, [&](std::size_t c) { below |= s.down(c); });
    std::vector<std::size_t> allowed;
    for_each_bit(below & within, [&](std::size_t x) {
      if (x != bot) allowed.push_back(x);
    });
    return detail::disjoint_family_reaches(s, allowed, 0, 0, bot, d);
  };
  return detail::for_each_cover(s, pool, 0, 0, bot, d, visit);
}

inline Subset disjunctively_compact_elements(const Structure& s) {
  s.require(Kind::distributive_lattice, "disjunctively_compact_elements");
  Mask out = 0;
  for (std::size_t d = 0; d < s.size(); ++d) {
    if (disjunctively_compact_within(s, s.all(), d)) out |= bit(d);
  }
  return {s.size(), out};
}

/// Finite witnesses that a poset is coherent: a finite cofinal set and, for each pair, a finite
/// set of common lower bounds through which every common lower bound factors.
struct CoherenceWitness {
  bool coherent = true;
  Mask top_cover = 0;
  struct PairBound {
    std::size_t a = 0;
    std::size_t b = 0;
    Mask maximal_lower_bounds = 0;
  };
  std::vector<PairBound> pair_bounds;
};

inline CoherenceWitness is_coherent_poset(const Poset& p) {
  CoherenceWitness w;
  w.top_cover = p.leq().maximal(p.all());
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = a; b < p.size(); ++b) {
      Mask lower = p.down(a) & p.down(b);
      w.pair_bounds.push_back({a, b, p.leq().maximal(lower)});
    }
  }
  return w;
}

}  // namespace ordua
