// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ordua/bits.hpp"
#include "ordua/config.hpp"
#include "ordua/error.hpp"
#include "ordua/poset.hpp"
#include "ordua/structure.hpp"

namespace ordua {

/// Upward closed families of subsets of the doubled carrier D + D* that obey the six closure
/// rules for the free Boolean algebra on a distributive lattice. Subset T of the doubled carrier
/// is encoded as a mask: bit d for d, bit n + d for d*.
struct ClosureFamily {
  std::size_t lattice_size = 0;
  std::size_t ground = 0;            // 2^(2n) subsets
  std::vector<DynBits> members;      // sorted
  Structure structure;               // members under inclusion
  std::vector<std::size_t> unit;     // d -> index of the least member containing {d}
};

class ClosureOracle {
 public:
  explicit ClosureOracle(const Structure& d) : d_(d), n_(d.size()) {
    ground_ = std::size_t{1} << (2 * n_);
    top_ = d.top_of();
    bottom_ = d.bottom_of();
  }

  std::size_t ground() const { return ground_; }

  /// Least family containing `seed` that is upward closed and stable under every rule.
  DynBits close(DynBits fam) const {
    for (std::size_t t = 0; t < ground_; ++t) {
      if (has(t, bottom_)) fam.set(t);  // rule 2
      for (std::size_t x = 0; x < n_; ++x) {
        if (has(t, x) && has(t, n_ + x)) fam.set(t);  // rule 5
      }
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t t = 0; t < ground_; ++t) {
        if (fam.test(t)) continue;
        if (derivable(fam, static_cast<Mask>(t))) {
          fam.set(t);
          changed = true;
        }
      }
    }
    return fam;
  }

  DynBits principal(Mask t) const {
    DynBits fam(ground_);
    const Mask full = full_mask(2 * n_);
    for (std::size_t s = 0; s < ground_; ++s) {
      if (subset_of(t, s) && subset_of(s, full)) fam.set(s);
    }
    return close(std::move(fam));
  }

 private:
  bool derivable(const DynBits& fam, Mask t) const {
    // upward closure: some subset obtained by dropping one element is already a member
    for (std::size_t e = 0; e < 2 * n_; ++e) {
      if (has(t, e) && fam.test(t & ~bit(e))) return true;
    }
    if (fam.test(t | bit(top_))) return true;  // rule 1
    for (std::size_t x = 0; x < n_; ++x) {
      // rule 6
      if (fam.test(t | bit(x)) && fam.test(t | bit(n_ + x))) return true;
    }
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        std::size_t j = d_.join_of(a, b);
        // rule 3 with U = t, a v b in t
        if (has(t, j) && fam.test(t | bit(a)) && fam.test(t | bit(b))) return true;
        // rule 4
        if (has(t, a) && has(t, b) && fam.test(t | bit(d_.meet_of(a, b)))) return true;
      }
    }
    return false;
  }

  const Structure& d_;
  std::size_t n_;
  std::size_t ground_ = 0;
  std::size_t top_ = 0;
  std::size_t bottom_ = 0;
};

/// Frame of closed families generated by the principal ones under closed unions; every member is
/// compact at finite scale, so the whole frame is returned.
inline ClosureFamily thm22_oracle(const Structure& d, const Bounds& bounds = {}) {
  d.require(Kind::distributive_lattice, "closure oracle");
  if (d.size() > bounds.oracle) {
    fail(Errc::oracle_bound_exceeded, "closure oracle accepts at most " + std::to_string(bounds.oracle) +
                                          " elements, got " + std::to_string(d.size()));
  }
  const std::size_t n = d.size();
  if (2 * n > 16) fail(Errc::oracle_bound_exceeded, "doubled carrier too large for the oracle");
  ClosureOracle oracle(d);
  ClosureFamily out;
  out.lattice_size = n;
  out.ground = oracle.ground();

  std::vector<DynBits> members;
  auto insert = [&](DynBits f) {
    auto it = std::lower_bound(members.begin(), members.end(), f);
    if (it != members.end() && *it == f) return false;
    members.insert(it, std::move(f));
    return true;
  };
  for (std::size_t t = 0; t < oracle.ground(); ++t) insert(oracle.principal(static_cast<Mask>(t)));
  bool grown = true;
  while (grown) {
    grown = false;
    std::vector<DynBits> snapshot = members;
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        DynBits u = snapshot[i];
        u |= snapshot[j];
        if (insert(oracle.close(std::move(u)))) grown = true;
      }
    }
  }
  if (members.size() > kMaxCarrier) fail(Errc::oracle_bound_exceeded, "closure frame exceeds 64 members");

  Relation r(members.size());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < members.size(); ++i) {
    labels.push_back("I" + std::to_string(i));
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (members[i].subset_of(members[j])) r.set(i, j);
    }
  }
  out.structure = classify(Poset(std::move(labels), std::move(r)));
  for (std::size_t x = 0; x < n; ++x) {
    DynBits u = oracle.principal(bit(x));
    out.unit.push_back(static_cast<std::size_t>(std::lower_bound(members.begin(), members.end(), u) -
                                                members.begin()));
  }
  out.members = std::move(members);
  return out;
}

}  // namespace ordua
