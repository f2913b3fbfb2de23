// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ordua/bits.hpp"
#include "ordua/config.hpp"
#include "ordua/error.hpp"
#include "ordua/filters.hpp"
#include "ordua/isomorphism.hpp"
#include "ordua/morphism.hpp"
#include "ordua/poset.hpp"
#include "ordua/set_family.hpp"
#include "ordua/space.hpp"
#include "ordua/structure.hpp"

namespace ordua {

enum class FreeKind { poset_monotone, poset_flat, msl, dlat, ddlat };

constexpr std::string_view free_kind_name(FreeKind k) {
  switch (k) {
    case FreeKind::poset_monotone: return "poset-monotone";
    case FreeKind::poset_flat: return "poset-flat";
    case FreeKind::msl: return "msl";
    case FreeKind::dlat: return "dlat";
    case FreeKind::ddlat: return "ddlat";
  }
  return "dlat";
}

inline std::optional<FreeKind> parse_free_kind(std::string_view s) {
  for (FreeKind k : {FreeKind::poset_monotone, FreeKind::poset_flat, FreeKind::msl, FreeKind::dlat,
                     FreeKind::ddlat}) {
    if (free_kind_name(k) == s) return k;
  }
  return std::nullopt;
}

/// The maps out of the source that the free Boolean algebra classifies.
constexpr MorphismKind class_morphism_kind(FreeKind k) {
  switch (k) {
    case FreeKind::poset_monotone: return MorphismKind::monotone;
    case FreeKind::poset_flat: return MorphismKind::flat_model;
    case FreeKind::msl: return MorphismKind::meet_hom;
    case FreeKind::dlat: return MorphismKind::lattice_hom;
    case FreeKind::ddlat: return MorphismKind::disjunctive_hom;
  }
  return MorphismKind::lattice_hom;
}

/// Maps between two sources of the same kind along which the construction is functorial.
constexpr MorphismKind source_morphism_kind(FreeKind k) {
  return k == FreeKind::poset_flat ? MorphismKind::flat : class_morphism_kind(k);
}

constexpr Kind required_kind(FreeKind k) {
  switch (k) {
    case FreeKind::poset_monotone:
    case FreeKind::poset_flat: return Kind::poset;
    case FreeKind::msl: return Kind::meet_semilattice;
    case FreeKind::dlat: return Kind::distributive_lattice;
    case FreeKind::ddlat: return Kind::dd_lattice;
  }
  return Kind::poset;
}

/// A free object realized inside the powerset of a point set. Members are subsets of the points;
/// `structure` is materialized whenever there are at most 64 members, with element i = members[i].
struct FreeResult {
  std::string construction;
  SetFamily points;                 // spectrum points, each a subset of the source carrier
  std::vector<std::string> point_labels;
  std::vector<Mask> atoms;          // atoms of the generated Boolean algebra (empty for lattices)
  std::vector<Mask> members;        // sorted
  std::vector<Mask> unit_sets;      // source element -> member
  std::optional<Structure> structure;
  std::vector<std::size_t> unit;    // source element -> index into members
  bool self_check = true;
  std::string self_check_detail;

  std::size_t size() const { return members.size(); }

  const Structure& require_structure() const {
    if (!structure) {
      fail(Errc::carrier_too_large, construction + " has " + std::to_string(members.size()) +
                                        " elements; only the point realization is available");
    }
    return *structure;
  }
};

namespace detail {

inline std::vector<std::string> point_names(const SetFamily& points, const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (Mask p : points) out.push_back(format_set(p, labels));
  return out;
}

inline std::vector<Mask> unit_sets_of(const SetFamily& points, std::size_t n) {
  if (points.size() > kMaxCarrier) {
    fail(Errc::carrier_too_large, "spectrum has " + std::to_string(points.size()) + " points, more than 64");
  }
  std::vector<Mask> out(n, 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for_each_bit(points[i], [&](std::size_t c) { out[c] |= bit(i); });
  }
  return out;
}

inline void finish(FreeResult& r) {
  std::sort(r.members.begin(), r.members.end());
  r.members.erase(std::unique(r.members.begin(), r.members.end()), r.members.end());
  r.unit.clear();
  for (Mask u : r.unit_sets) {
    auto it = std::lower_bound(r.members.begin(), r.members.end(), u);
    r.unit.push_back(static_cast<std::size_t>(it - r.members.begin()));
  }
  if (r.members.size() <= kMaxCarrier) {
    r.structure = classify_family(SetFamily(r.points.size(), r.members), r.point_labels);
  }
}

// Closure of a family of subsets under binary union and intersection.
inline std::vector<Mask> lattice_closure(std::vector<Mask> gens, std::size_t limit) {
  std::unordered_set<Mask> seen(gens.begin(), gens.end());
  std::vector<Mask> all(seen.begin(), seen.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      for (Mask m : {all[i] | all[j], all[i] & all[j]}) {
        if (seen.insert(m).second) {
          all.push_back(m);
          if (all.size() > limit) fail(Errc::carrier_too_large, "generated lattice exceeds 64 elements");
        }
      }
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

inline SetFamily spectrum_points(const Structure& c, FreeKind kind) {
  switch (kind) {
    case FreeKind::poset_monotone: return SetFamily(c.size(), upper_sets(c.base().leq()));
    case FreeKind::poset_flat:
    case FreeKind::msl: return principal_filters(c.base());
    case FreeKind::dlat: return prime_filters(c);
    case FreeKind::ddlat: return disjunctive_filters(c);
  }
  return {};
}

}  // namespace detail

/// Boolean subalgebra of the powerset of the spectrum generated by the basic sets
/// {point : c in point}.
inline FreeResult free_boolean(const Structure& c, FreeKind kind, const Bounds& bounds = {}) {
  c.require(required_kind(kind), std::string("free_boolean(") + std::string(free_kind_name(kind)) + ")");
  if (c.size() > bounds.enumeration) {
    fail(Errc::carrier_too_large, "free_boolean on " + std::to_string(c.size()) + " elements exceeds bound " +
                                      std::to_string(bounds.enumeration));
  }
  FreeResult r;
  r.construction = "free Boolean algebra (" + std::string(free_kind_name(kind)) + ")";
  r.points = detail::spectrum_points(c, kind);
  r.point_labels = detail::point_names(r.points, c.labels());
  r.unit_sets = detail::unit_sets_of(r.points, c.size());
  r.atoms = generated_atoms(r.points.size(), SetFamily(r.points.size(), r.unit_sets));
  r.members = unions_of_atoms(r.atoms);
  detail::finish(r);
  return r;
}

/// A Boolean homomorphism out of a free algebra into the powerset of k atoms is fixed by choosing
/// an atom for each target atom j: h(S) = {j : atoms[choice[j]] is inside S}.
inline Mask apply_atom_choice(const std::vector<Mask>& atoms, const std::vector<std::size_t>& choice, Mask s) {
  Mask out = 0;
  for (std::size_t j = 0; j < choice.size(); ++j) {
    if (subset_of(atoms[choice[j]], s)) out |= bit(j);
  }
  return out;
}

struct UniversalCount {
  std::size_t atoms = 0;            // target is the powerset of this many atoms
  std::size_t class_morphisms = 0;  // maps of the classified kind from the source
  std::size_t boolean_homs = 0;     // Boolean homomorphisms out of the free algebra
};

struct UniversalReport {
  bool ok = true;
  std::vector<UniversalCount> counts;
  std::string counterexample;
};

/// For every powerset target with at most bounds.hom_target atoms: each class morphism has
/// exactly one Boolean extension along the unit, and each Boolean homomorphism restricts to a
/// class morphism.
inline UniversalReport universal_property_check(const FreeResult& fr, const Structure& c, FreeKind kind,
                                                const Bounds& bounds = {}) {
  UniversalReport rep;
  auto src = share(c);
  const std::size_t r = fr.atoms.size();
  for (std::size_t k = 0; k <= bounds.hom_target && rep.ok; ++k) {
    auto target = share(powerset_structure(k));
    auto homs = enumerate_homomorphisms(src, target, class_morphism_kind(kind), bounds);
    UniversalCount cnt{k, homs.size(), 0};

    // Composites h o unit for every atom choice, indexed by the composite map.
    std::vector<std::vector<std::size_t>> composites;
    std::vector<std::size_t> choice(k, 0);
    std::size_t total = 1;
    for (std::size_t j = 0; j < k; ++j) total *= r;
    composites.reserve(total);
    for (std::size_t t = 0; t < total; ++t) {
      std::size_t rest = t;
      for (std::size_t j = 0; j < k; ++j) {
        choice[j] = rest % r;
        rest /= r;
      }
      std::vector<std::size_t> comp(c.size());
      for (std::size_t x = 0; x < c.size(); ++x) {
        comp[x] = static_cast<std::size_t>(apply_atom_choice(fr.atoms, choice, fr.unit_sets[x]));
      }
      composites.push_back(std::move(comp));
    }
    cnt.boolean_homs = composites.size();
    rep.counts.push_back(cnt);

    std::vector<std::vector<std::size_t>> sorted = composites;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size() && rep.ok; ++i) {
      if (sorted[i] == sorted[i + 1]) {
        rep.ok = false;
        rep.counterexample = "two Boolean homomorphisms into 2^" + std::to_string(k) + " agree on the unit";
      }
    }
    for (const auto& comp : composites) {
      if (!rep.ok) break;
      if (!is_homomorphism(StructureMorphism(src, target, comp, class_morphism_kind(kind)))) {
        rep.ok = false;
        rep.counterexample = "a Boolean homomorphism into 2^" + std::to_string(k) +
                             " restricts to a map outside the class";
      }
    }
    for (const auto& h : homs) {
      if (!rep.ok) break;
      if (!std::binary_search(sorted.begin(), sorted.end(), h.map)) {
        rep.ok = false;
        std::string m;
        for (std::size_t x = 0; x < c.size(); ++x) {
          m += (x ? "," : "") + c.label(x) + "->" + target->label(h.map[x]);
        }
        rep.counterexample = "class morphism [" + m + "] has no Boolean extension";
      }
    }
  }
  return rep;
}

/// The unique Boolean homomorphism B_f : free(c) -> free(c') with B_f o unit = unit' o f,
/// described by an atom of free(c) for each atom of free(c'). Absent when none exists; the
/// number of candidates is reported so uniqueness can be asserted.
struct InducedMap {
  std::optional<std::vector<std::size_t>> choice;
  std::size_t extensions = 0;
};

inline InducedMap induced_boolean_map(const FreeResult& from, const FreeResult& to, const StructureMorphism& f) {
  InducedMap out;
  std::vector<std::size_t> choice(to.atoms.size(), 0);
  std::size_t ways = 1;
  for (std::size_t j = 0; j < to.atoms.size(); ++j) {
    std::size_t candidates = 0;
    for (std::size_t i = 0; i < from.atoms.size(); ++i) {
      bool ok = true;
      for (std::size_t x = 0; x < f.map.size() && ok; ++x) {
        ok = subset_of(from.atoms[i], from.unit_sets[x]) == subset_of(to.atoms[j], to.unit_sets[f.map[x]]);
      }
      if (ok) {
        if (candidates == 0) choice[j] = i;
        ++candidates;
      }
    }
    ways *= candidates;
  }
  out.extensions = ways;
  if (ways == 1) out.choice = std::move(choice);
  return out;
}

/// Member-level action of an atom choice between two free realizations.
inline Mask apply_induced(const FreeResult& from, const FreeResult& to, const std::vector<std::size_t>& choice,
                          Mask s) {
  Mask out = 0;
  for (std::size_t j = 0; j < choice.size(); ++j) {
    if (subset_of(from.atoms[choice[j]], s)) out |= to.atoms[j];
  }
  return out;
}

/// Prime filters of a Boolean algebra compared by their traces on a sub-collection C.
struct OrderedBoolean {
  Structure algebra;
  SetFamily prime;   // prime filters of the algebra
  Relation spec_order;
  Mask generators = 0;  // the sub-collection C

  bool antisymmetric() const { return spec_order.is_antisymmetric(); }
};

inline OrderedBoolean ordered_boolean(Structure algebra, Mask generators) {
  algebra.require(Kind::boolean_algebra, "ordered Boolean algebra");
  OrderedBoolean ob;
  ob.prime = prime_filters(algebra);
  ob.generators = generators;
  ob.spec_order = Relation(ob.prime.size());
  for (std::size_t i = 0; i < ob.prime.size(); ++i) {
    for (std::size_t j = 0; j < ob.prime.size(); ++j) {
      if (subset_of(ob.prime[i] & generators, ob.prime[j] & generators)) ob.spec_order.set(i, j);
    }
  }
  ob.algebra = std::move(algebra);
  return ob;
}

/// (B_C, <=_C) for the free Boolean algebra of the matching class.
inline OrderedBoolean ordered_boolean_of(const Structure& m, FreeKind kind, const Bounds& bounds = {}) {
  FreeResult fr = free_boolean(m, kind, bounds);
  Mask gens = 0;
  for (std::size_t u : fr.unit) gens |= bit(u);
  return ordered_boolean(fr.require_structure(), gens);
}

/// Elements b with G <= G' and b in G implying b in G'.
inline Subset upper_elements(const OrderedBoolean& ob) {
  Mask out = 0;
  for (std::size_t b = 0; b < ob.algebra.size(); ++b) {
    bool upper = true;
    for (std::size_t g = 0; g < ob.prime.size() && upper; ++g) {
      if (!has(ob.prime[g], b)) continue;
      for_each_bit(ob.spec_order.up(g), [&](std::size_t h) { upper = upper && has(ob.prime[h], b); });
    }
    if (upper) out |= bit(b);
  }
  return {ob.algebra.size(), out};
}

struct Recognition {
  bool free = false;
  bool antisymmetric = true;
  Mask image = 0;
  Mask expected = 0;
};

/// Decides whether an injective kind-morphism into a Boolean algebra presents it as the free
/// Boolean algebra of the class. Only msl, dlat and ddlat are supported.
inline Recognition recognize_free_boolean(const StructureMorphism& i, FreeKind kind) {
  if (kind != FreeKind::msl && kind != FreeKind::dlat && kind != FreeKind::ddlat) {
    fail(Errc::invalid_argument, "recognition is available for msl, dlat and ddlat");
  }
  const Structure& b = *i.target;
  b.require(Kind::boolean_algebra, "recognize_free_boolean target");
  i.source->require(required_kind(kind), "recognize_free_boolean source");
  if (!i.injective()) fail(Errc::not_injective, "the embedding is not injective");
  Recognition rec;
  rec.image = i.image();
  StructureMorphism as_class(i.source, i.target, i.map, class_morphism_kind(kind));
  if (!is_homomorphism(as_class)) return rec;

  OrderedBoolean ob = ordered_boolean(b, rec.image);
  rec.antisymmetric = ob.antisymmetric();
  // Points with equal traces cannot be told apart by the generators, so they could not all be
  // distinct models of the source.
  if (!rec.antisymmetric) return rec;
  Mask uppers = upper_elements(ob).members;
  switch (kind) {
    case FreeKind::msl:
      for_each_bit(uppers, [&](std::size_t u) {
        if (b.join_all(uppers & b.down(u) & ~bit(u)) != u) rec.expected |= bit(u);
      });
      break;
    case FreeKind::dlat:
      rec.expected = uppers;
      break;
    case FreeKind::ddlat:
      for_each_bit(uppers, [&](std::size_t u) {
        if (disjunctively_compact_within(b, uppers, u)) rec.expected |= bit(u);
      });
      break;
    default:
      break;
  }
  rec.free = rec.expected == rec.image;
  return rec;
}

/// The unit of a free Boolean realization as a morphism into its materialized algebra.
inline StructureMorphism unit_morphism(const FreeResult& fr, const StructurePtr& source, FreeKind kind) {
  return {source, share(fr.require_structure()), fr.unit, class_morphism_kind(kind)};
}

namespace detail {

// Unit is an order embedding onto exactly `recovered`.
inline bool unit_recovers(const FreeResult& r, const Structure& source, Mask recovered, std::string& detail) {
  Mask image = 0;
  for (std::size_t u : r.unit) image |= bit(u);
  if (image != recovered) {
    detail = "recovered elements differ from the unit image";
    return false;
  }
  const Structure& s = *r.structure;
  for (std::size_t a = 0; a < source.size(); ++a) {
    for (std::size_t b = 0; b < source.size(); ++b) {
      if (source.leq(a, b) != s.leq(r.unit[a], r.unit[b])) {
        detail = "unit is not an order embedding";
        return false;
      }
    }
  }
  return true;
}

inline FreeResult lattice_on_points(const Structure& c, SetFamily points, std::string construction) {
  FreeResult r;
  r.construction = std::move(construction);
  r.points = std::move(points);
  r.point_labels = point_names(r.points, c.labels());
  r.unit_sets = unit_sets_of(r.points, c.size());
  std::vector<Mask> gens = r.unit_sets;
  gens.push_back(0);
  gens.push_back(full_mask(r.points.size()));
  r.members = lattice_closure(std::move(gens), kMaxCarrier);
  finish(r);
  return r;
}

}  // namespace detail

/// Sublattice of the powerset of filters generated by the basic sets, with empty set and carrier.
inline FreeResult free_dlat_on_msl(const Structure& m, const Bounds& bounds = {}) {
  m.require(Kind::meet_semilattice, "free_dlat_on_msl");
  FreeResult r = detail::lattice_on_points(m, filters(m, bounds), "free distributive lattice on a meet-semilattice");
  const Structure& s = *r.structure;
  Mask indec = indecomposable_elements(s).members;
  r.self_check = detail::unit_recovers(r, m, indec, r.self_check_detail);
  for (std::size_t a = 0; a < s.size() && r.self_check; ++a) {
    if (s.join_all(indec & s.down(a)) != a) {
      r.self_check = false;
      r.self_check_detail = "element " + s.label(a) + " is not a join of indecomposables";
    }
  }
  for_each_bit(indec, [&](std::size_t a) {
    for_each_bit(indec, [&](std::size_t b) {
      if (r.self_check && !has(indec, s.meet_of(a, b))) {
        r.self_check = false;
        r.self_check_detail = "meet of indecomposables " + s.label(a) + ", " + s.label(b) + " decomposes";
      }
    });
  });
  return r;
}

/// Lower sets under inclusion with p -> down-set of p.
inline FreeResult free_frame_on_poset(const Poset& p) {
  FreeResult r;
  r.construction = "free frame on a poset";
  r.points = SetFamily(p.size(), [&] {
    std::vector<Mask> singletons;
    for (std::size_t i = 0; i < p.size(); ++i) singletons.push_back(bit(i));
    return singletons;
  }());
  r.point_labels = p.labels();
  r.members = lower_sets(p.leq());
  for (std::size_t i = 0; i < p.size(); ++i) r.unit_sets.push_back(p.down(i));
  if (r.members.size() > kMaxCarrier) fail(Errc::carrier_too_large, "more than 64 lower sets");
  detail::finish(r);
  Structure source = classify(p);
  r.self_check = detail::unit_recovers(r, source, supercompact_elements(*r.structure).members, r.self_check_detail);
  return r;
}

/// Sublattice of the powerset of disjunctive filters generated by the basic sets, with bounds.
inline FreeResult free_dlat_on_ddlat(const Structure& d) {
  d.require(Kind::dd_lattice, "free_dlat_on_ddlat");
  FreeResult r = detail::lattice_on_points(d, disjunctive_filters(d), "free distributive lattice on a dd-lattice");
  r.self_check = detail::unit_recovers(r, d, disjunctively_compact_elements(*r.structure).members,
                                       r.self_check_detail);
  return r;
}

}  // namespace ordua
