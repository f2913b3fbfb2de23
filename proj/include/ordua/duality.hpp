// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
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

/// A spectrum: filter-like points of an ordered structure, the basic sets {F : c in F}, the
/// subbasic ("coherent") space they generate, and the ordered patch space.
struct DualityResult {
  PreorderedSpace space;
  FiniteSpace base;
  SetFamily points;              // each point is a subset of the source carrier
  std::vector<Mask> embedding;   // source element -> set of point indices containing it

  std::size_t point_count() const { return points.size(); }
};

namespace detail {

inline std::vector<std::string> point_labels(const SetFamily& points, const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  out.reserve(points.size());
  for (Mask p : points) out.push_back(format_set(p, labels));
  return out;
}

inline std::vector<Mask> basic_sets(const SetFamily& points, std::size_t n) {
  if (points.size() > kMaxCarrier) {
    fail(Errc::carrier_too_large, "spectrum has " + std::to_string(points.size()) + " points, more than 64");
  }
  std::vector<Mask> emb(n, 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for_each_bit(points[i], [&](std::size_t c) { emb[c] |= bit(i); });
  }
  return emb;
}

// Points of finite spectra are ordered by inclusion; the patch of the basic sets carries the
// specialization order of the subbasic space.
inline DualityResult spectrum_of(const SetFamily& points, const std::vector<std::string>& labels,
                                 std::optional<FiniteSpace> base = std::nullopt) {
  DualityResult r;
  r.points = points;
  r.embedding = basic_sets(points, labels.size());
  auto names = point_labels(points, labels);
  SetFamily basics(points.size(), r.embedding);
  r.base = base ? std::move(*base) : generate_topology(names, basics);
  r.space = PreorderedSpace(patch_space(names, basics), specialization_preorder(r.base));
  return r;
}

}  // namespace detail

inline FiniteSpace stone_spectrum(const Structure& d) {
  d.require(Kind::distributive_lattice, "stone_spectrum");
  auto points = prime_filters(d);
  return generate_topology(detail::point_labels(points, d.labels()),
                           SetFamily(points.size(), detail::basic_sets(points, d.size())));
}

inline DualityResult priestley_of_dlat(const Structure& d) {
  d.require(Kind::distributive_lattice, "priestley_of_dlat");
  return detail::spectrum_of(prime_filters(d), d.labels());
}

inline Structure dlat_of_priestley(const PreorderedSpace& ps) {
  require_priestley(ps, "dlat_of_priestley");
  return classify_family(clopen_uppers(ps), ps.space.labels());
}

inline FiniteSpace coherent_of_priestley(const PreorderedSpace& ps) {
  require_priestley(ps, "coherent_of_priestley");
  return upper_open_reduct(ps);
}

inline PreorderedSpace priestley_of_coherent(const FiniteSpace& s) {
  if (!s.is_t0()) fail(Errc::not_t0, "priestley_of_coherent needs a T0 space");
  return {patch_space(s.labels(), s.opens()), specialization_preorder(s)};
}

/// Points are the filters of the poset; the base space has opens {F : F meets U} for lower sets U.
inline DualityResult poset_spectrum(const Poset& p, const Bounds& bounds = {}) {
  if (p.size() > bounds.enumeration) {
    fail(Errc::carrier_too_large, "poset spectrum on " + std::to_string(p.size()) + " elements exceeds bound " +
                                      std::to_string(bounds.enumeration));
  }
  SetFamily points = principal_filters(p);
  std::vector<Mask> opens;
  for (Mask u : lower_sets(p.leq())) {
    Mask meets = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if ((points[i] & u) != 0) meets |= bit(i);
    }
    opens.push_back(meets);
  }
  auto names = detail::point_labels(points, p.labels());
  FiniteSpace base = FiniteSpace::trusted(names, SetFamily(points.size(), std::move(opens)));
  return detail::spectrum_of(points, p.labels(), std::move(base));
}

inline DualityResult msl_spectrum(const Structure& m, const Bounds& bounds = {}) {
  m.require(Kind::meet_semilattice, "msl_spectrum");
  return detail::spectrum_of(filters(m, bounds), m.labels());
}

inline DualityResult ddlat_spectrum(const Structure& d) {
  d.require(Kind::dd_lattice, "ddlat_spectrum");
  return detail::spectrum_of(disjunctive_filters(d), d.labels());
}

enum class DualityKind { coherent_poset, msl, dlat, ddlat };

constexpr std::string_view duality_kind_name(DualityKind k) {
  switch (k) {
    case DualityKind::coherent_poset: return "coherent-poset";
    case DualityKind::msl: return "msl";
    case DualityKind::dlat: return "dlat";
    case DualityKind::ddlat: return "ddlat";
  }
  return "dlat";
}

constexpr MorphismKind morphism_kind_for(DualityKind k) {
  switch (k) {
    case DualityKind::coherent_poset: return MorphismKind::flat;
    case DualityKind::msl: return MorphismKind::meet_hom;
    case DualityKind::dlat: return MorphismKind::lattice_hom;
    case DualityKind::ddlat: return MorphismKind::disjunctive_hom;
  }
  return MorphismKind::lattice_hom;
}

inline DualityResult spectrum_for(const Structure& s, DualityKind k, const Bounds& bounds = {}) {
  switch (k) {
    case DualityKind::coherent_poset: return poset_spectrum(s.base(), bounds);
    case DualityKind::msl: return msl_spectrum(s, bounds);
    case DualityKind::dlat: return priestley_of_dlat(s);
    case DualityKind::ddlat: return ddlat_spectrum(s);
  }
  return priestley_of_dlat(s);
}

/// The point map of the dual of f (from the target's spectrum to the source's), with the checks
/// that it is continuous for both patch topologies and order-preserving.
struct DualMap {
  DualityResult from;  // spectrum of f.target
  DualityResult to;    // spectrum of f.source
  std::vector<std::size_t> map;
  bool continuous = false;
  bool order_preserving = false;
};

inline DualMap dual_morphism(const StructureMorphism& f, DualityKind k, const Bounds& bounds = {}) {
  if (f.kind != morphism_kind_for(k)) {
    fail(Errc::kind_mismatch, std::string(duality_kind_name(k)) + " duality acts on " +
                                  std::string(morphism_kind_name(morphism_kind_for(k))) + " maps, got " +
                                  std::string(morphism_kind_name(f.kind)));
  }
  DualMap d;
  d.from = spectrum_for(*f.target, k, bounds);
  d.to = spectrum_for(*f.source, k, bounds);
  d.map.reserve(d.from.point_count());
  for (Mask point : d.from.points) {
    Mask pre = f.preimage(point);
    if (!d.to.points.contains(pre)) {
      fail(Errc::not_a_filter_image, "inverse image " + f.source->format(pre) + " of " + f.target->format(point) +
                                         " is not a point of the source spectrum");
    }
    d.map.push_back(d.to.points.index_of(pre));
  }
  d.continuous = is_continuous(d.map, d.from.space.space, d.to.space.space);
  d.order_preserving = is_order_preserving(d.map, d.from.space.order, d.to.space.order);
  return d;
}

enum class ExtImageVariant { coherent_poset, msl };

struct ExtImageReport {
  bool ok = true;
  SetFamily weakly_indecomposable;
  std::optional<std::pair<std::size_t, std::size_t>> unseparated;  // points x not below y
  std::optional<std::pair<Mask, Mask>> bad_intersection;
  bool top_missing = false;
};

inline ExtImageReport extended_image_check(const PreorderedSpace& ps, ExtImageVariant variant) {
  ExtImageReport rep;
  rep.weakly_indecomposable = weakly_indecomposable_clopen_uppers(ps);
  const auto& w = rep.weakly_indecomposable;
  for (std::size_t x = 0; x < ps.size() && rep.ok; ++x) {
    for (std::size_t y = 0; y < ps.size() && rep.ok; ++y) {
      if (ps.order.test(x, y)) continue;
      bool split = false;
      for (Mask u : w) split = split || (has(u, x) && !has(u, y));
      if (!split) {
        rep.ok = false;
        rep.unseparated = std::pair{x, y};
      }
    }
  }
  if (variant == ExtImageVariant::msl && rep.ok) {
    if (!w.contains(ps.space.all())) {
      rep.ok = false;
      rep.top_missing = true;
    }
    for (std::size_t i = 0; i < w.size() && rep.ok; ++i) {
      for (std::size_t j = i + 1; j < w.size() && rep.ok; ++j) {
        if (!w.contains(w[i] & w[j])) {
          rep.ok = false;
          rep.bad_intersection = std::pair{w[i], w[j]};
        }
      }
    }
  }
  return rep;
}

/// The structure recovered from a spectrum: weakly indecomposable clopen uppers under inclusion.
inline Structure recovered_structure(const PreorderedSpace& ps) {
  return classify_family(weakly_indecomposable_clopen_uppers(ps), ps.space.labels());
}

/// Clopen uppers whose covers by clopen uppers all admit pairwise-disjoint clopen-upper
/// refinements with the same union.
inline SetFamily disjunctively_compact_clopen_uppers(const PreorderedSpace& ps) {
  require_priestley(ps, "disjunctively compact clopen uppers");
  SetFamily uppers = clopen_uppers(ps);
  Structure lattice = classify_family(uppers, ps.space.labels());
  std::vector<Mask> out;
  for (std::size_t i = 0; i < uppers.size(); ++i) {
    if (disjunctively_compact_within(lattice, lattice.all(), i)) out.push_back(uppers[i]);
  }
  return SetFamily(ps.size(), std::move(out));
}

}  // namespace ordua
