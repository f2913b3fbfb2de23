// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordua/bits.hpp"
#include "ordua/config.hpp"
#include "ordua/error.hpp"
#include "ordua/structure.hpp"

namespace ordua {

enum class MorphismKind {
  monotone,
  flat,         // flat in the order-theoretic sense (both flatness conditions, target a poset)
  flat_model,   // model of the flat-functor theory in a distributive lattice
  meet_hom,
  lattice_hom,
  boolean_hom,
  disjunctive_hom,
};

constexpr std::string_view morphism_kind_name(MorphismKind k) {
  switch (k) {
    case MorphismKind::monotone: return "monotone";
    case MorphismKind::flat: return "flat";
    case MorphismKind::flat_model: return "flat-model";
    case MorphismKind::meet_hom: return "meet-hom";
    case MorphismKind::lattice_hom: return "lattice-hom";
    case MorphismKind::boolean_hom: return "boolean-hom";
    case MorphismKind::disjunctive_hom: return "disjunctive-hom";
  }
  return "monotone";
}

inline std::optional<MorphismKind> parse_morphism_kind(std::string_view s) {
  for (MorphismKind k : {MorphismKind::monotone, MorphismKind::flat, MorphismKind::flat_model,
                         MorphismKind::meet_hom, MorphismKind::lattice_hom, MorphismKind::boolean_hom,
                         MorphismKind::disjunctive_hom}) {
    if (morphism_kind_name(k) == s) return k;
  }
  return std::nullopt;
}

using StructurePtr = std::shared_ptr<const Structure>;

inline StructurePtr share(Structure s) { return std::make_shared<const Structure>(std::move(s)); }

/// A total map between carriers with a claimed kind. The claim is only trusted after
/// is_homomorphism has confirmed it.
struct StructureMorphism {
  StructurePtr source;
  StructurePtr target;
  std::vector<std::size_t> map;
  MorphismKind kind = MorphismKind::monotone;

  StructureMorphism() = default;
  StructureMorphism(StructurePtr src, StructurePtr tgt, std::vector<std::size_t> m, MorphismKind k)
      : source(std::move(src)), target(std::move(tgt)), map(std::move(m)), kind(k) {
    if (!source || !target) fail(Errc::invalid_argument, "morphism without source or target");
    if (map.size() != source->size()) fail(Errc::invalid_argument, "morphism map is not total");
    for (std::size_t v : map) {
      if (v >= target->size()) fail(Errc::invalid_argument, "morphism maps outside the target");
    }
  }

  std::size_t operator()(std::size_t i) const { return map[i]; }

  Mask image() const {
    Mask m = 0;
    for (std::size_t v : map) m |= bit(v);
    return m;
  }
  bool injective() const { return count(image()) == map.size(); }

  /// Inverse image of a subset of the target carrier.
  Mask preimage(Mask m) const {
    Mask out = 0;
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (has(m, map[i])) out |= bit(i);
    }
    return out;
  }
};

inline StructureMorphism identity_morphism(const StructurePtr& s, MorphismKind kind) {
  std::vector<std::size_t> m(s->size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = i;
  return {s, s, std::move(m), kind};
}

/// g after f.
inline StructureMorphism compose(const StructureMorphism& g, const StructureMorphism& f) {
  if (f.target.get() != g.source.get() && !(f.target->base() == g.source->base())) {
    fail(Errc::carrier_mismatch, "morphisms are not composable");
  }
  std::vector<std::size_t> m(f.map.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = g.map[f.map[i]];
  return {f.source, g.target, std::move(m), f.kind};
}

/// Failure of one of the two flatness conditions.
struct FlatWitness {
  int condition = 0;  // 1 or 2
  std::size_t d = 0;
  std::size_t c = 0;
  std::size_t c2 = 0;
};

struct FlatCheck {
  bool flat = true;
  std::optional<FlatWitness> witness;
  explicit operator bool() const { return flat; }
};

inline bool is_monotone(const StructureMorphism& f) {
  const Structure& s = *f.source;
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool ok = true;
    for_each_bit(s.up(i), [&](std::size_t j) { ok = ok && f.target->leq(f(i), f(j)); });
    if (!ok) return false;
  }
  return true;
}

inline FlatCheck is_flat_map(const StructureMorphism& f) {
  if (!is_monotone(f)) fail(Errc::not_monotone, "flatness is defined for monotone maps");
  const Structure& src = *f.source;
  const Structure& tgt = *f.target;
  FlatCheck out;
  // Failing d are closed upward, so scanning top-down reports a maximal witness.
  std::vector<std::size_t> top_down(tgt.size());
  for (std::size_t d = 0; d < tgt.size(); ++d) top_down[d] = d;
  std::stable_sort(top_down.begin(), top_down.end(),
                   [&](std::size_t x, std::size_t y) { return count(tgt.down(x)) > count(tgt.down(y)); });
  for (std::size_t d : top_down) {
    bool covered = false;
    for (std::size_t c = 0; c < src.size() && !covered; ++c) covered = tgt.leq(d, f(c));
    if (!covered) {
      out.flat = false;
      out.witness = FlatWitness{1, d, 0, 0};
      return out;
    }
  }
  for (std::size_t d : top_down) {
    for (std::size_t c = 0; c < src.size(); ++c) {
      if (!tgt.leq(d, f(c))) continue;
      for (std::size_t c2 = c; c2 < src.size(); ++c2) {
        if (!tgt.leq(d, f(c2))) continue;
        bool found = false;
        for_each_bit(src.down(c) & src.down(c2), [&](std::size_t c3) { found = found || tgt.leq(d, f(c3)); });
        if (!found) {
          out.flat = false;
          out.witness = FlatWitness{2, d, c, c2};
          return out;
        }
      }
    }
  }
  return out;
}

namespace detail {

inline void require_kinds(const StructureMorphism& f, Kind src, Kind tgt) {
  f.source->require(src, std::string(morphism_kind_name(f.kind)) + " source");
  f.target->require(tgt, std::string(morphism_kind_name(f.kind)) + " target");
}

// Join over f(S) in a lattice target.
inline std::size_t image_join(const StructureMorphism& f, Mask s) {
  std::size_t acc = f.target->bottom_of();
  for_each_bit(s, [&](std::size_t i) { acc = f.target->join_of(acc, f(i)); });
  return acc;
}

inline bool flat_model_laws(const StructureMorphism& f) {
  const Structure& src = *f.source;
  const Structure& tgt = *f.target;
  const Relation& order = src.base().leq();
  if (image_join(f, order.maximal(src.all())) != tgt.top_of()) return false;
  for (std::size_t a = 0; a < src.size(); ++a) {
    for (std::size_t b = a; b < src.size(); ++b) {
      Mask k = order.maximal(src.down(a) & src.down(b));
      if (tgt.meet_of(f(a), f(b)) != image_join(f, k)) return false;
    }
  }
  return true;
}

inline bool meet_laws(const StructureMorphism& f) {
  const Structure& src = *f.source;
  const Structure& tgt = *f.target;
  if (f(src.top_of()) != tgt.top_of()) return false;
  for (std::size_t a = 0; a < src.size(); ++a) {
    for (std::size_t b = a; b < src.size(); ++b) {
      if (f(src.meet_of(a, b)) != tgt.meet_of(f(a), f(b))) return false;
    }
  }
  return true;
}

inline bool join_laws(const StructureMorphism& f, bool disjoint_only) {
  const Structure& src = *f.source;
  const Structure& tgt = *f.target;
  if (f(src.bottom_of()) != tgt.bottom_of()) return false;
  for (std::size_t a = 0; a < src.size(); ++a) {
    for (std::size_t b = a; b < src.size(); ++b) {
      if (disjoint_only && !src.disjoint(a, b)) continue;
      if (f(src.join_of(a, b)) != tgt.join_of(f(a), f(b))) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Verifies exactly the laws of f.kind. Kind requirements on source/target raise KindMismatch.
inline bool is_homomorphism(const StructureMorphism& f) {
  switch (f.kind) {
    case MorphismKind::monotone:
      return is_monotone(f);
    case MorphismKind::flat:
      return is_monotone(f) && is_flat_map(f).flat;
    case MorphismKind::flat_model:
      f.target->require(Kind::distributive_lattice, "flat-model target");
      return is_monotone(f) && detail::flat_model_laws(f);
    case MorphismKind::meet_hom:
      detail::require_kinds(f, Kind::meet_semilattice, Kind::meet_semilattice);
      return detail::meet_laws(f);
    case MorphismKind::lattice_hom:
      detail::require_kinds(f, Kind::distributive_lattice, Kind::distributive_lattice);
      return detail::meet_laws(f) && detail::join_laws(f, false);
    case MorphismKind::boolean_hom: {
      detail::require_kinds(f, Kind::boolean_algebra, Kind::boolean_algebra);
      if (!detail::meet_laws(f) || !detail::join_laws(f, false)) return false;
      for (std::size_t a = 0; a < f.source->size(); ++a) {
        if (f(*f.source->complement(a)) != *f.target->complement(f(a))) return false;
      }
      return true;
    }
    case MorphismKind::disjunctive_hom:
      // Meets, top, bottom, and joins of disjoint pairs; disjointness is then preserved too.
      detail::require_kinds(f, Kind::dd_lattice, Kind::dd_lattice);
      return detail::meet_laws(f) && detail::join_laws(f, true);
  }
  return false;
}

namespace detail {

// One law instance over already-assigned elements, checked as soon as its last element is set.
struct Constraint {
  enum Type { leq, equals, meet, join, complement } type;
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;  // result element for meet/join, or the constant for equals
};

inline std::vector<std::vector<Constraint>> build_constraints(const Structure& src, const Structure& tgt,
                                                              MorphismKind kind,
                                                              const std::vector<std::size_t>& position) {
  const std::size_t n = src.size();
  std::vector<std::vector<Constraint>> at(n);
  auto last = [&](std::initializer_list<std::size_t> xs) {
    std::size_t best = *xs.begin();
    for (std::size_t x : xs) {
      if (position[x] > position[best]) best = x;
    }
    return best;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for_each_bit(src.up(i), [&](std::size_t j) {
      if (i != j) at[last({i, j})].push_back({Constraint::leq, i, j, 0});
    });
  }
  const bool meets = kind == MorphismKind::meet_hom || kind == MorphismKind::lattice_hom ||
                     kind == MorphismKind::boolean_hom || kind == MorphismKind::disjunctive_hom;
  const bool joins = kind == MorphismKind::lattice_hom || kind == MorphismKind::boolean_hom;
  if (meets) {
    at[src.top_of()].push_back({Constraint::equals, src.top_of(), 0, tgt.top_of()});
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        std::size_t m = src.meet_of(a, b);
        at[last({a, b, m})].push_back({Constraint::meet, a, b, m});
      }
    }
  }
  if (joins || kind == MorphismKind::disjunctive_hom) {
    at[src.bottom_of()].push_back({Constraint::equals, src.bottom_of(), 0, tgt.bottom_of()});
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (!joins && !src.disjoint(a, b)) continue;
        std::size_t j = src.join_of(a, b);
        at[last({a, b, j})].push_back({Constraint::join, a, b, j});
      }
    }
  }
  if (kind == MorphismKind::boolean_hom) {
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t c = *src.complement(a);
      at[last({a, c})].push_back({Constraint::complement, a, c, 0});
    }
  }
  return at;
}

inline bool satisfied(const Constraint& k, const Structure& tgt, const std::vector<std::size_t>& m) {
  switch (k.type) {
    case Constraint::leq: return tgt.leq(m[k.a], m[k.b]);
    case Constraint::equals: return m[k.a] == k.c;
    case Constraint::meet: return tgt.meet_of(m[k.a], m[k.b]) == m[k.c];
    case Constraint::join: return tgt.join_of(m[k.a], m[k.b]) == m[k.c];
    case Constraint::complement: return *tgt.complement(m[k.a]) == m[k.b];
  }
  return false;
}

}  // namespace detail

/// Every map of the given kind from src to tgt, in lexicographic order of the map vector.
/// Backtracking checks each law instance as soon as all of its elements are assigned.
inline std::vector<StructureMorphism> enumerate_homomorphisms(const StructurePtr& src, const StructurePtr& tgt,
                                                              MorphismKind kind, const Bounds& bounds = {}) {
  if (src->size() > bounds.enumeration || tgt->size() > bounds.enumeration) {
    fail(Errc::carrier_too_large, "hom enumeration between carriers of size " + std::to_string(src->size()) +
                                      " and " + std::to_string(tgt->size()) + " exceeds bound " +
                                      std::to_string(bounds.enumeration));
  }
  // Validate kind requirements once, through the same checks used by is_homomorphism.
  {
    std::vector<std::size_t> probe(src->size(), 0);
    StructureMorphism trial(src, tgt, probe, kind);
    (void)is_homomorphism(trial);
  }
  const std::size_t n = src->size();
  std::vector<std::size_t> order(n);
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  auto constraints = detail::build_constraints(*src, *tgt, kind, position);

  std::vector<StructureMorphism> out;
  std::vector<std::size_t> m(n, 0);
  const bool needs_leaf_check = kind == MorphismKind::flat || kind == MorphismKind::flat_model;
  std::function<void(std::size_t)> assign = [&](std::size_t depth) {
    if (depth == n) {
      StructureMorphism f(src, tgt, m, kind);
      if (!needs_leaf_check || is_homomorphism(f)) out.push_back(std::move(f));
      return;
    }
    std::size_t x = order[depth];
    for (std::size_t v = 0; v < tgt->size(); ++v) {
      m[x] = v;
      bool ok = true;
      for (const auto& k : constraints[x]) {
        if (!detail::satisfied(k, *tgt, m)) {
          ok = false;
          break;
        }
      }
      if (ok) assign(depth + 1);
    }
  };
  assign(0);
  return out;
}

}  // namespace ordua
