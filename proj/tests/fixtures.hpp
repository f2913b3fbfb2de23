// SPDX-License-Identifier: Apache-2.0
// Small named structures shared by the unit tests.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ordua/ordua.hpp"

namespace fx {

using ordua::Mask;

inline ordua::Structure make(std::vector<std::string> labels, std::vector<std::pair<std::string, std::string>> leq) {
  return ordua::classify(ordua::validate_poset(labels, leq));
}

inline ordua::Structure C1() { return make({"1"}, {}); }
inline ordua::Structure C2() { return make({"0", "1"}, {{"0", "1"}}); }
inline ordua::Structure C3() { return make({"0", "a", "1"}, {{"0", "a"}, {"a", "1"}}); }
inline ordua::Structure D4() { return make({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}); }
inline ordua::Structure A2() { return make({"p", "q"}, {}); }
inline ordua::Structure N5() {
  return make({"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}});
}
inline ordua::Structure M3() {
  return make({"0", "x", "y", "z", "1"},
              {{"0", "x"}, {"0", "y"}, {"0", "z"}, {"x", "1"}, {"y", "1"}, {"z", "1"}});
}

inline std::size_t idx(const ordua::Structure& s, const std::string& l) { return *s.base().index_of(l); }

inline Mask set(const ordua::Structure& s, std::initializer_list<const char*> ls) {
  Mask m = 0;
  for (const char* l : ls) m |= ordua::bit(idx(s, l));
  return m;
}

/// Map given by label pairs in source order.
inline ordua::StructureMorphism hom(const ordua::Structure& src, const ordua::Structure& tgt,
                                    std::vector<std::string> images, ordua::MorphismKind k) {
  std::vector<std::size_t> m;
  for (const auto& l : images) m.push_back(idx(tgt, l));
  return {ordua::share(src), ordua::share(tgt), std::move(m), k};
}

inline ordua::FiniteSpace space(std::size_t n, std::vector<Mask> opens) {
  return ordua::FiniteSpace(ordua::index_labels(n), ordua::SetFamily(n, std::move(opens)));
}
inline ordua::FiniteSpace discrete(std::size_t n) {
  std::vector<Mask> all;
  for (Mask m = 0; m < (Mask{1} << n); ++m) all.push_back(m);
  return space(n, all);
}
inline ordua::FiniteSpace indiscrete(std::size_t n) { return space(n, {0, ordua::full_mask(n)}); }
inline ordua::FiniteSpace sierpinski() { return space(2, {0, 0b10, 0b11}); }

inline ordua::Relation chain_order(std::size_t n) {
  ordua::Relation r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) r.set(i, j);
  }
  return r;
}

inline bool iso(const ordua::Structure& a, const ordua::Structure& b) {
  return ordua::find_order_isomorphism(a.base(), b.base()).has_value();
}

}  // namespace fx
