// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordua/bits.hpp"
#include "ordua/error.hpp"
#include "ordua/poset.hpp"
#include "ordua/set_family.hpp"
#include "ordua/structure.hpp"

namespace ordua {

/// A topology on {0..n-1} stored as its full family of opens.
class FiniteSpace {
 public:
  FiniteSpace() = default;

  /// Validates that the family contains the empty set and the carrier and is closed under binary
  /// unions and intersections.
  FiniteSpace(std::vector<std::string> labels, SetFamily opens)
      : labels_(std::move(labels)), opens_(std::move(opens)) {
    if (opens_.carrier() != labels_.size()) fail(Errc::carrier_mismatch, "opens live on a different carrier");
    const Mask full = full_mask(size());
    if (!opens_.contains(0) || !opens_.contains(full)) {
      fail(Errc::invalid_argument, "opens must contain the empty set and the carrier");
    }
    for (Mask a : opens_) {
      for (Mask b : opens_) {
        if (!opens_.contains(a | b) || !opens_.contains(a & b)) {
          fail(Errc::invalid_argument, "opens are not closed under union and intersection");
        }
      }
    }
    init_neighbourhoods();
  }

  /// For families already known to be topologies.
  static FiniteSpace trusted(std::vector<std::string> labels, SetFamily opens) {
    FiniteSpace s;
    s.labels_ = std::move(labels);
    s.opens_ = std::move(opens);
    s.init_neighbourhoods();
    return s;
  }

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const SetFamily& opens() const { return opens_; }
  Mask all() const { return full_mask(size()); }

  bool is_open(Mask m) const { return opens_.contains(m); }
  bool is_closed(Mask m) const { return opens_.contains(all() & ~m); }
  bool is_clopen(Mask m) const { return is_open(m) && is_closed(m); }

  SetFamily clopens() const {
    std::vector<Mask> out;
    for (Mask u : opens_) {
      if (is_closed(u)) out.push_back(u);
    }
    return SetFamily(size(), std::move(out));
  }

  /// Smallest open containing x.
  Mask neighbourhood(std::size_t x) const { return nbhd_[x]; }

  bool is_discrete() const {
    for (std::size_t x = 0; x < size(); ++x) {
      if (nbhd_[x] != bit(x)) return false;
    }
    return true;
  }

  /// Distinct points have distinct neighbourhood systems.
  bool is_t0() const {
    for (std::size_t x = 0; x < size(); ++x) {
      for (std::size_t y = x + 1; y < size(); ++y) {
        if (has(nbhd_[x], y) && has(nbhd_[y], x)) return false;
      }
    }
    return true;
  }

  std::string format(Mask m) const { return format_set(m, labels_); }

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.labels_ == b.labels_ && a.opens_ == b.opens_;
  }

 private:
  void init_neighbourhoods() {
    nbhd_.assign(size(), all());
    for (Mask u : opens_) {
      for_each_bit(u, [&](std::size_t x) { nbhd_[x] &= u; });
    }
  }

  std::vector<std::string> labels_;
  SetFamily opens_;
  std::vector<Mask> nbhd_;
};

/// A topology together with an arbitrary preorder on the points.
struct PreorderedSpace {
  FiniteSpace space;
  Relation order;

  PreorderedSpace() = default;
  PreorderedSpace(FiniteSpace s, Relation r) : space(std::move(s)), order(std::move(r)) {
    if (order.size() != space.size()) fail(Errc::carrier_mismatch, "preorder and space differ in size");
    if (!order.is_preorder()) fail(Errc::invalid_argument, "point relation is not a preorder");
  }

  std::size_t size() const { return space.size(); }

  friend bool operator==(const PreorderedSpace&, const PreorderedSpace&) = default;
};

namespace detail {

inline void check_carrier(std::size_t n, const SetFamily& family) {
  if (family.carrier() != n) {
    fail(Errc::carrier_mismatch, "family over " + std::to_string(family.carrier()) + " points, expected " +
                                     std::to_string(n));
  }
}

// Opens of a finite topology are the unions of minimal neighbourhoods, i.e. the upper sets of the
// relation x -> nbhd(x).
inline SetFamily opens_from_neighbourhoods(const std::vector<Mask>& nbhd) {
  Relation r(nbhd.size());
  for (std::size_t x = 0; x < nbhd.size(); ++x) {
    for_each_bit(nbhd[x], [&](std::size_t y) { r.set(x, y); });
  }
  return SetFamily(nbhd.size(), upper_sets(r));
}

}  // namespace detail

inline FiniteSpace generate_topology(std::vector<std::string> labels, const SetFamily& subbasis) {
  const std::size_t n = labels.size();
  detail::check_carrier(n, subbasis);
  std::vector<Mask> nbhd(n, full_mask(n));
  for (Mask s : subbasis) {
    for_each_bit(s, [&](std::size_t x) { nbhd[x] &= s; });
  }
  return FiniteSpace::trusted(std::move(labels), detail::opens_from_neighbourhoods(nbhd));
}

inline FiniteSpace generate_topology(std::size_t n, const SetFamily& subbasis) {
  return generate_topology(index_labels(n), subbasis);
}

inline SetFamily with_complements(const SetFamily& a) {
  std::vector<Mask> sets = a.sets();
  const Mask full = full_mask(a.carrier());
  for (Mask s : a) sets.push_back(full & ~s);
  return SetFamily(a.carrier(), std::move(sets));
}

inline FiniteSpace patch_space(std::vector<std::string> labels, const SetFamily& a) {
  detail::check_carrier(labels.size(), a);
  return generate_topology(std::move(labels), with_complements(a));
}

inline FiniteSpace patch_space(std::size_t n, const SetFamily& a) { return patch_space(index_labels(n), a); }

/// Atoms of the Boolean algebra of subsets generated by a family: points grouped by which
/// members contain them. Sorted by bitmask.
inline std::vector<Mask> generated_atoms(std::size_t n, const SetFamily& a) {
  detail::check_carrier(n, a);
  std::vector<Mask> atoms;
  Mask seen = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (has(seen, x)) continue;
    Mask cls = 0;
    for (std::size_t y = x; y < n; ++y) {
      bool same = true;
      for (Mask s : a) same = same && (has(s, x) == has(s, y));
      if (same) cls |= bit(y);
    }
    seen |= cls;
    atoms.push_back(cls);
  }
  std::sort(atoms.begin(), atoms.end());
  return atoms;
}

/// Every union of the given pairwise-disjoint atoms.
inline std::vector<Mask> unions_of_atoms(const std::vector<Mask>& atoms, std::size_t max_atoms = 16) {
  if (atoms.size() > max_atoms) {
    fail(Errc::carrier_too_large, std::to_string(atoms.size()) + " atoms give more than 2^" +
                                      std::to_string(max_atoms) + " members");
  }
  std::vector<Mask> out;
  out.reserve(std::size_t{1} << atoms.size());
  for (Mask pick = 0; pick < (Mask{1} << atoms.size()); ++pick) {
    Mask u = 0;
    for_each_bit(pick, [&](std::size_t i) { u |= atoms[i]; });
    out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Boolean subalgebra of the powerset generated by the family, ordered by inclusion.
inline Structure priestley_boolean_algebra(const std::vector<std::string>& labels, const SetFamily& a) {
  auto atoms = generated_atoms(labels.size(), a);
  if (atoms.size() > 6) fail(Errc::carrier_too_large, "generated algebra has more than 64 elements");
  return classify_family(SetFamily(labels.size(), unions_of_atoms(atoms)), labels);
}

inline Structure priestley_boolean_algebra(std::size_t n, const SetFamily& a) {
  return priestley_boolean_algebra(index_labels(n), a);
}

/// x <= y iff every open containing x contains y.
inline Relation specialization_preorder(const FiniteSpace& s) {
  Relation r(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) {
    for_each_bit(s.neighbourhood(x), [&](std::size_t y) { r.set(x, y); });
  }
  return r;
}

/// The functor sending a space to itself with its specialization preorder.
inline PreorderedSpace with_specialization(const FiniteSpace& s) { return {s, specialization_preorder(s)}; }

/// Opens that are also upper sets of the space's preorder.
inline FiniteSpace upper_open_reduct(const PreorderedSpace& ps) {
  std::vector<Mask> out;
  for (Mask u : ps.space.opens()) {
    if (ps.order.is_upper(u)) out.push_back(u);
  }
  return FiniteSpace::trusted(ps.space.labels(), SetFamily(ps.size(), std::move(out)));
}

inline FiniteSpace alexandrov_space(const Relation& preorder, std::vector<std::string> labels) {
  if (!preorder.is_preorder()) fail(Errc::invalid_argument, "Alexandrov topology needs a preorder");
  if (labels.size() != preorder.size()) fail(Errc::carrier_mismatch, "label count differs from relation size");
  return FiniteSpace::trusted(std::move(labels), SetFamily(preorder.size(), upper_sets(preorder)));
}

inline FiniteSpace alexandrov_space(const Relation& preorder) {
  return alexandrov_space(preorder, index_labels(preorder.size()));
}

/// The preorder with its Alexandrov topology.
inline PreorderedSpace alexandrov_preordered(const Relation& preorder) {
  return {alexandrov_space(preorder), preorder};
}

inline Relation preorder_coreflection(const PreorderedSpace& ps) {
  return ps.order.intersect(specialization_preorder(ps.space));
}

struct PriestleyReport {
  bool is_compact = true;
  bool separation_ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
  SetFamily clopen_uppers;
};

inline SetFamily clopen_uppers(const PreorderedSpace& ps) {
  std::vector<Mask> out;
  for (Mask u : ps.space.clopens()) {
    if (ps.order.is_upper(u)) out.push_back(u);
  }
  return SetFamily(ps.size(), std::move(out));
}

/// Every finite space is compact; separation asks each x not below y to be split off by a
/// clopen upper set.
inline PriestleyReport priestley_check(const PreorderedSpace& ps) {
  PriestleyReport rep;
  rep.clopen_uppers = clopen_uppers(ps);
  for (std::size_t x = 0; x < ps.size() && rep.separation_ok; ++x) {
    for (std::size_t y = 0; y < ps.size() && rep.separation_ok; ++y) {
      if (ps.order.test(x, y)) continue;
      bool split = false;
      for (Mask u : rep.clopen_uppers) split = split || (has(u, x) && !has(u, y));
      if (!split) {
        rep.separation_ok = false;
        rep.failing_pair = std::pair{x, y};
      }
    }
  }
  return rep;
}

inline void require_priestley(const PreorderedSpace& ps, const char* what) {
  auto rep = priestley_check(ps);
  if (!rep.separation_ok) {
    fail(Errc::not_priestley, std::string(what) + ": points " + ps.space.label(rep.failing_pair->first) + " and " +
                                  ps.space.label(rep.failing_pair->second) + " are not separated");
  }
}

/// Members of a union-closed family that are not the union of the members strictly inside them.
/// The empty set is the empty union.
inline std::vector<Mask> union_irreducible(const std::vector<Mask>& family) {
  std::vector<Mask> out;
  for (Mask u : family) {
    if (u == 0) continue;
    Mask below = 0;
    for (Mask v : family) {
      if (v != u && subset_of(v, u)) below |= v;
    }
    if (below != u) out.push_back(u);
  }
  return out;
}

inline SetFamily weakly_indecomposable_clopen_uppers(const PreorderedSpace& ps) {
  require_priestley(ps, "weakly indecomposable clopen uppers");
  return SetFamily(ps.size(), union_irreducible(clopen_uppers(ps).sets()));
}

/// x <=_A y iff every member of A containing x contains y.
inline Relation family_preorder(std::size_t n, const SetFamily& a) {
  detail::check_carrier(n, a);
  Relation r(n);
  for (std::size_t x = 0; x < n; ++x) {
    Mask row = full_mask(n);
    for (Mask s : a) {
      if (has(s, x)) row &= s;
    }
    for_each_bit(row, [&](std::size_t y) { r.set(x, y); });
  }
  return r;
}

struct PatchCharacterization {
  bool is_patch = false;         // topology is the A-patch and the preorder is <=_A
  bool axioms_hold = false;      // A consists of upper sets and the separation axiom holds
  std::optional<std::pair<std::size_t, std::size_t>> unseparated;
  bool agree() const { return is_patch == axioms_hold; }
};

/// Both sides of the patch characterization. The separation axiom ranges over pairs x, y with
/// x not below y in the space's own preorder and asks for a separating clopen upper set taken
/// from A. The two sides agree whenever that preorder is a partial order.
inline PatchCharacterization check_patch_characterization(const PreorderedSpace& ps, const SetFamily& a) {
  detail::check_carrier(ps.size(), a);
  PatchCharacterization out;
  out.is_patch = patch_space(ps.space.labels(), a).opens() == ps.space.opens() &&
                 family_preorder(ps.size(), a) == ps.order;
  bool uppers = true;
  for (Mask s : a) uppers = uppers && ps.order.is_upper(s);
  bool separated = true;
  for (std::size_t x = 0; x < ps.size() && separated; ++x) {
    for (std::size_t y = 0; y < ps.size() && separated; ++y) {
      if (ps.order.test(x, y)) continue;
      bool found = false;
      for (Mask s : a) {
        found = found || (has(s, x) && !has(s, y) && ps.space.is_clopen(s) && ps.order.is_upper(s));
      }
      if (!found) {
        separated = false;
        out.unseparated = std::pair{x, y};
      }
    }
  }
  out.axioms_hold = uppers && separated;
  return out;
}

/// Opens of a finite T0 space coincide with the patch opens that are specialization-upper.
inline bool check_frame_pullback(const FiniteSpace& coh) {
  if (!coh.is_t0()) fail(Errc::not_t0, "frame pullback check needs a T0 space");
  const FiniteSpace patch = patch_space(coh.labels(), coh.opens());
  const Relation spec = specialization_preorder(coh);
  std::vector<Mask> meet;
  for (Mask u : patch.opens()) {
    if (spec.is_upper(u)) meet.push_back(u);
  }
  return SetFamily(coh.size(), std::move(meet)) == coh.opens();
}

/// Continuity of a point map: preimages of opens are open.
inline bool is_continuous(const std::vector<std::size_t>& f, const FiniteSpace& x, const FiniteSpace& y) {
  for (Mask v : y.opens()) {
    Mask pre = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (has(v, f[i])) pre |= bit(i);
    }
    if (!x.is_open(pre)) return false;
  }
  return true;
}

inline bool is_order_preserving(const std::vector<std::size_t>& f, const Relation& r, const Relation& s) {
  for (std::size_t a = 0; a < r.size(); ++a) {
    for (std::size_t b = 0; b < r.size(); ++b) {
      if (r.test(a, b) && !s.test(f[a], f[b])) return false;
    }
  }
  return true;
}

/// Arrows of preordered spaces: continuous and order-preserving.
inline bool is_ptop_map(const std::vector<std::size_t>& f, const PreorderedSpace& x, const PreorderedSpace& y) {
  return is_continuous(f, x.space, y.space) && is_order_preserving(f, x.order, y.order);
}

}  // namespace ordua
