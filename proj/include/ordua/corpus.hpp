// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "ordua/bits.hpp"
#include "ordua/isomorphism.hpp"
#include "ordua/poset.hpp"
#include "ordua/set_family.hpp"
#include "ordua/space.hpp"
#include "ordua/structure.hpp"

namespace ordua {

/// Every partial order on n points up to isomorphism, in a fixed deterministic order. Each class
/// is represented by a naturally labeled order (i <= j implies i <= j as integers).
inline std::vector<Poset> posets_up_to_iso(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<Relation> reps;
  std::map<std::vector<detail::Signature>, std::vector<std::size_t>> buckets;
  for (Mask pick = 0; pick < (Mask{1} << pairs.size()); ++pick) {
    Relation r = Relation::identity(n);
    for_each_bit(pick, [&](std::size_t k) { r.set(pairs[k].first, pairs[k].second); });
    if (!r.is_transitive()) continue;
    auto sig = detail::signatures(r);
    std::sort(sig.begin(), sig.end());
    auto& bucket = buckets[sig];
    bool fresh = true;
    for (std::size_t idx : bucket) {
      if (find_order_isomorphism(reps[idx], r)) {
        fresh = false;
        break;
      }
    }
    if (fresh) {
      bucket.push_back(reps.size());
      reps.push_back(std::move(r));
    }
  }
  std::vector<Poset> out;
  out.reserve(reps.size());
  for (auto& r : reps) out.emplace_back(index_labels(n), std::move(r));
  return out;
}

inline std::vector<Poset> posets_up_to_iso_upto(std::size_t max_n) {
  std::vector<Poset> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto layer = posets_up_to_iso(n);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

/// Structures of at least the given kind among posets of size at most max_n, up to isomorphism.
inline std::vector<Structure> structures_of_kind(std::size_t max_n, Kind at_least) {
  std::vector<Structure> out;
  for (auto& p : posets_up_to_iso_upto(max_n)) {
    Structure s = classify(p);
    if (s.at_least(at_least)) out.push_back(std::move(s));
  }
  return out;
}

/// Deterministic generator: mt19937_64 with integer reductions only, so sequences match across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(engine_() % bound); }
  bool chance(std::size_t percent) { return below(100) < percent; }

 private:
  std::mt19937_64 engine_;
};

/// Random naturally labeled poset on 1..max_n points; each pair i < j is related with a
/// probability drawn per sample, then closed transitively.
inline Poset random_poset(Rng& rng, std::size_t max_n) {
  const std::size_t n = 1 + rng.below(max_n);
  const std::size_t density = 10 + rng.below(60);
  Relation r = Relation::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.chance(density)) r.set(i, j);
    }
  }
  return Poset(index_labels(n), r.reflexive_transitive_closure());
}

/// Distributive lattice of lower sets of p.
inline Structure lower_set_lattice(const Poset& p) {
  return classify_family(SetFamily(p.size(), lower_sets(p.leq())), p.labels());
}

/// Every preorder (reflexive transitive relation) on n labeled points.
inline std::vector<Relation> all_preorders(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) pairs.emplace_back(i, j);
    }
  }
  std::vector<Relation> out;
  for (Mask pick = 0; pick < (Mask{1} << pairs.size()); ++pick) {
    Relation r = Relation::identity(n);
    for_each_bit(pick, [&](std::size_t k) { r.set(pairs[k].first, pairs[k].second); });
    if (r.is_transitive()) out.push_back(std::move(r));
  }
  return out;
}

/// Every topology on n labeled points, found by testing each family of subsets containing the
/// empty set and the carrier for closure under binary union and intersection.
inline std::vector<FiniteSpace> all_topologies(std::size_t n) {
  const Mask full = full_mask(n);
  std::vector<Mask> middle;
  for (Mask s = 1; s < full; ++s) middle.push_back(s);
  std::vector<FiniteSpace> out;
  for (Mask pick = 0; pick < (Mask{1} << middle.size()); ++pick) {
    std::vector<Mask> fam{0, full};
    for_each_bit(pick, [&](std::size_t k) { fam.push_back(middle[k]); });
    SetFamily family(n, fam);
    bool closed = true;
    for (std::size_t a = 0; a < family.size() && closed; ++a) {
      for (std::size_t b = a + 1; b < family.size() && closed; ++b) {
        closed = family.contains(family[a] | family[b]) && family.contains(family[a] & family[b]);
      }
    }
    if (closed) out.push_back(FiniteSpace::trusted(index_labels(n), std::move(family)));
  }
  return out;
}

}  // namespace ordua
