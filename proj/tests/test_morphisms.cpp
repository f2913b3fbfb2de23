// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ordua;
using MK = MorphismKind;

namespace {

std::vector<std::vector<std::size_t>> maps_of(const std::vector<StructureMorphism>& v) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& f : v) out.push_back(f.map);
  return out;
}

// Independent statement of each law set in terms of brute-force glb/lub.
bool reference_law(const Structure& s, const Structure& t, const std::vector<std::size_t>& f, MK k) {
  const Poset& p = s.base();
  const Poset& q = t.base();
  switch (k) {
    case MK::monotone: return oracle::monotone(p, q, f);
    case MK::meet_hom: return oracle::preserves_meets(p, q, f);
    case MK::lattice_hom:
    case MK::boolean_hom: return oracle::preserves_meets(p, q, f) && oracle::preserves_joins(p, q, f, false);
    case MK::disjunctive_hom: return oracle::preserves_meets(p, q, f) && oracle::preserves_joins(p, q, f, true);
    default: return false;
  }
}

// Flatness read directly: every target element d lies below some image, and any two source
// elements mapped above d have a common lower bound still mapped above d.
bool reference_flat(const Structure& s, const Structure& t, const std::vector<std::size_t>& f) {
  if (!oracle::monotone(s.base(), t.base(), f)) return false;
  for (std::size_t d = 0; d < t.size(); ++d) {
    bool covered = false;
    for (std::size_t x = 0; x < s.size(); ++x) covered = covered || t.leq(d, f[x]);
    if (!covered) return false;
  }
  for (std::size_t d = 0; d < t.size(); ++d) {
    for (std::size_t x = 0; x < s.size(); ++x) {
      for (std::size_t y = 0; y < s.size(); ++y) {
        if (!t.leq(d, f[x]) || !t.leq(d, f[y])) continue;
        bool lower = false;
        for (std::size_t z = 0; z < s.size(); ++z) {
          lower = lower || (s.leq(z, x) && s.leq(z, y) && t.leq(d, f[z]));
        }
        if (!lower) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST(Flat, Examples) {
  Structure c3 = fx::C3(), c2 = fx::C2(), a2 = fx::A2();
  EXPECT_TRUE(is_flat_map(identity_morphism(share(c3), MK::flat)).flat);
  EXPECT_TRUE(is_flat_map(fx::hom(c3, c3, {"1", "1", "1"}, MK::flat)).flat);
  FlatCheck bad = is_flat_map(fx::hom(a2, c2, {"1", "1"}, MK::flat));
  EXPECT_FALSE(bad.flat);
  ASSERT_TRUE(bad.witness.has_value());
  EXPECT_EQ(bad.witness->d, fx::idx(c2, "1"));
}

TEST(Flat, NonMonotoneIsAnError) {
  Structure c2 = fx::C2();
  try {
    is_flat_map(fx::hom(c2, c2, {"1", "0"}, MK::flat));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_monotone);
  }
}

TEST(Homomorphism, Examples) {
  Structure c3 = fx::C3(), c2 = fx::C2(), d4 = fx::D4();
  EXPECT_TRUE(is_homomorphism(fx::hom(c3, c2, {"0", "1", "1"}, MK::lattice_hom)));
  EXPECT_TRUE(is_homomorphism(fx::hom(c3, c2, {"0", "0", "1"}, MK::lattice_hom)));
  EXPECT_FALSE(is_homomorphism(fx::hom(d4, c2, {"0", "1", "1", "1"}, MK::lattice_hom)));
}

TEST(Homomorphism, KindRequirements) {
  Structure a2 = fx::A2(), c2 = fx::C2();
  EXPECT_THROW(is_homomorphism(fx::hom(a2, c2, {"1", "1"}, MK::meet_hom)), Error);
  EXPECT_THROW(is_homomorphism(fx::hom(fx::C3(), fx::C3(), {"0", "a", "1"}, MK::boolean_hom)), Error);
}

TEST(Homomorphism, DisjunctiveHomPreservesDisjointJoinsOnly) {
  // Sending both atoms of D4 to 0 in C2 preserves meets and has no disjoint pair with a nonzero
  // image, but loses the join a v b = 1.
  Structure d4 = fx::D4(), c2 = fx::C2();
  EXPECT_TRUE(is_homomorphism(fx::hom(d4, c2, {"0", "0", "0", "1"}, MK::meet_hom)));
  EXPECT_FALSE(is_homomorphism(fx::hom(d4, c2, {"0", "0", "0", "1"}, MK::disjunctive_hom)));
  EXPECT_TRUE(is_homomorphism(fx::hom(d4, c2, {"0", "1", "0", "1"}, MK::disjunctive_hom)));
}

TEST(Enumerate, Examples) {
  auto c2 = share(fx::C2()), c3 = share(fx::C3()), a2 = share(fx::A2());
  EXPECT_EQ(enumerate_homomorphisms(c2, c2, MK::lattice_hom).size(), 1U);
  EXPECT_EQ(enumerate_homomorphisms(c3, c2, MK::lattice_hom).size(), 2U);
  EXPECT_EQ(enumerate_homomorphisms(a2, c2, MK::monotone).size(), 4U);
}

TEST(Enumerate, MatchesNaiveFilteringOfAllMaps) {
  auto corpus = posets_up_to_iso_upto(4);
  std::vector<Structure> ss;
  for (auto& p : corpus) ss.push_back(classify(p));
  for (const auto& s : ss) {
    for (const auto& t : ss) {
      for (MK k : {MK::monotone, MK::meet_hom, MK::lattice_hom, MK::disjunctive_hom, MK::boolean_hom}) {
        Kind need = k == MK::monotone       ? Kind::poset
                    : k == MK::meet_hom     ? Kind::meet_semilattice
                    : k == MK::disjunctive_hom ? Kind::dd_lattice
                    : k == MK::lattice_hom  ? Kind::distributive_lattice
                                            : Kind::boolean_algebra;
        if (!s.at_least(need) || !t.at_least(need)) continue;
        auto got = maps_of(enumerate_homomorphisms(share(s), share(t), k));
        auto want = oracle::all_maps(s.size(), t.size(),
                                     [&](const std::vector<std::size_t>& m) { return reference_law(s, t, m, k); });
        EXPECT_EQ(got, want) << morphism_kind_name(k) << " " << s.size() << "->" << t.size();
      }
      auto flat = maps_of(enumerate_homomorphisms(share(s), share(t), MK::flat));
      auto want = oracle::all_maps(s.size(), t.size(),
                                   [&](const std::vector<std::size_t>& m) { return reference_flat(s, t, m); });
      EXPECT_EQ(flat, want) << "flat " << s.size() << "->" << t.size();
    }
  }
}

TEST(Enumerate, ClosedUnderComposition) {
  auto corpus = structures_of_kind(3, Kind::meet_semilattice);
  for (MK k : {MK::monotone, MK::flat, MK::meet_hom}) {
    for (const auto& a : corpus) {
      for (const auto& b : corpus) {
        for (const auto& c : corpus) {
          auto pa = share(a), pb = share(b), pc = share(c);
          for (const auto& f : enumerate_homomorphisms(pa, pb, k)) {
            for (const auto& g : enumerate_homomorphisms(pb, pc, k)) {
              EXPECT_TRUE(is_homomorphism(compose(g, f)));
            }
          }
        }
      }
    }
  }
}

TEST(Enumerate, BoundIsEnforced) {
  Bounds b;
  b.enumeration = 2;
  try {
    enumerate_homomorphisms(share(fx::C3()), share(fx::C2()), MK::monotone, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::carrier_too_large);
  }
}

TEST(Morphism, ValidationAndHelpers) {
  auto c2 = share(fx::C2());
  EXPECT_THROW(StructureMorphism(c2, c2, {0}, MK::monotone), Error);
  EXPECT_THROW(StructureMorphism(c2, c2, {0, 2}, MK::monotone), Error);
  StructureMorphism f(c2, c2, {1, 1}, MK::monotone);
  EXPECT_EQ(f.image(), Mask{0b10});
  EXPECT_FALSE(f.injective());
  EXPECT_EQ(f.preimage(0b10), Mask{0b11});
  for (MK k : {MK::monotone, MK::flat, MK::flat_model, MK::meet_hom, MK::lattice_hom, MK::boolean_hom,
               MK::disjunctive_hom}) {
    EXPECT_EQ(parse_morphism_kind(morphism_kind_name(k)), k);
  }
}

TEST(Isomorphism, FindsAndRejects) {
  Structure d4 = fx::D4();
  Structure d4b = fx::make({"t", "u", "v", "w"}, {{"u", "t"}, {"w", "t"}, {"v", "u"}, {"v", "w"}});
  auto phi = find_order_isomorphism(d4.base(), d4b.base());
  ASSERT_TRUE(phi.has_value());
  EXPECT_TRUE(is_order_isomorphism(d4.base().leq(), d4b.base().leq(), *phi));
  EXPECT_FALSE(find_order_isomorphism(fx::C3().base(), fx::A2().base()).has_value());
  EXPECT_FALSE(find_order_isomorphism(fx::N5().base(), fx::M3().base()).has_value());
}

TEST(Isomorphism, AgreesWithPermutationSearch) {
  auto corpus = posets_up_to_iso(4);
  Rng rng(3);
  for (const auto& p : corpus) {
    for (const auto& q : corpus) {
      EXPECT_EQ(find_order_isomorphism(p, q).has_value(), oracle::isomorphic(p.leq(), q.leq()));
    }
    // a random relabeling is always found
    std::vector<std::size_t> perm(p.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    Relation r(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) {
      for (std::size_t y = 0; y < p.size(); ++y) {
        if (p.leq(x, y)) r.set(perm[x], perm[y]);
      }
    }
    EXPECT_TRUE(find_order_isomorphism(p.leq(), r).has_value());
  }
}
