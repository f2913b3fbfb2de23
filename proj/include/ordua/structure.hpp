// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordua/bits.hpp"
#include "ordua/error.hpp"
#include "ordua/poset.hpp"
#include "ordua/set_family.hpp"

namespace ordua {

/// Capability levels, ordered so that a stronger kind compares greater.
enum class Kind { poset, meet_semilattice, dd_lattice, distributive_lattice, boolean_algebra };

constexpr std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::poset: return "poset";
    case Kind::meet_semilattice: return "meet-semilattice";
    case Kind::dd_lattice: return "dd-lattice";
    case Kind::distributive_lattice: return "distributive-lattice";
    case Kind::boolean_algebra: return "boolean-algebra";
  }
  return "poset";
}

inline std::optional<Kind> parse_kind(std::string_view s) {
  for (Kind k : {Kind::poset, Kind::meet_semilattice, Kind::dd_lattice, Kind::distributive_lattice,
                 Kind::boolean_algebra}) {
    if (kind_name(k) == s) return k;
  }
  return std::nullopt;
}

/// A poset together with the order-theoretic operations it supports and its strongest kind.
///
/// Meet and join tables hold the glb/lub of each pair wherever it exists (-1 otherwise), so they
/// agree with the order by construction. Values are immutable once classified.
class Structure {
 public:
  static constexpr int kUndefined = -1;

  Structure() = default;

  const Poset& base() const { return base_; }
  std::size_t size() const { return base_.size(); }
  Kind kind() const { return kind_; }
  bool at_least(Kind k) const { return kind_ >= k; }
  const std::string& label(std::size_t i) const { return base_.label(i); }
  const std::vector<std::string>& labels() const { return base_.labels(); }
  bool leq(std::size_t i, std::size_t j) const { return base_.leq(i, j); }
  Mask up(std::size_t i) const { return base_.up(i); }
  Mask down(std::size_t i) const { return down_[i]; }
  Mask all() const { return base_.all(); }

  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const { return lookup(meet_, a, b); }
  std::optional<std::size_t> join(std::size_t a, std::size_t b) const { return lookup(join_, a, b); }
  std::optional<std::size_t> top() const { return top_; }
  std::optional<std::size_t> bottom() const { return bottom_; }
  std::optional<std::size_t> complement(std::size_t a) const {
    if (complement_.empty() || complement_[a] < 0) return std::nullopt;
    return static_cast<std::size_t>(complement_[a]);
  }

  /// Meet/join that must exist (lattice kinds); throws KindMismatch otherwise.
  std::size_t meet_of(std::size_t a, std::size_t b) const {
    auto m = meet(a, b);
    if (!m) fail(Errc::kind_mismatch, "meet of " + label(a) + " and " + label(b) + " does not exist");
    return *m;
  }
  std::size_t join_of(std::size_t a, std::size_t b) const {
    auto m = join(a, b);
    if (!m) fail(Errc::kind_mismatch, "join of " + label(a) + " and " + label(b) + " does not exist");
    return *m;
  }
  std::size_t top_of() const {
    if (!top_) fail(Errc::kind_mismatch, "no top element");
    return *top_;
  }
  std::size_t bottom_of() const {
    if (!bottom_) fail(Errc::kind_mismatch, "no bottom element");
    return *bottom_;
  }

  /// Join of a set of elements; the empty join is the bottom.
  std::size_t join_all(Mask m) const {
    std::size_t acc = bottom_of();
    for_each_bit(m, [&](std::size_t i) { acc = join_of(acc, i); });
    return acc;
  }
  std::size_t meet_all(Mask m) const {
    std::size_t acc = top_of();
    for_each_bit(m, [&](std::size_t i) { acc = meet_of(acc, i); });
    return acc;
  }

  /// Disjoint means the meet is the bottom element.
  bool disjoint(std::size_t a, std::size_t b) const {
    auto m = meet(a, b);
    return bottom_ && m && *m == *bottom_;
  }

  void require(Kind k, std::string_view what) const {
    if (kind_ < k) {
      fail(Errc::kind_mismatch, std::string(what) + " needs a " + std::string(kind_name(k)) + ", got " +
                                    std::string(kind_name(kind_)));
    }
  }

  std::string format(Mask m) const { return base_.format(m); }

  friend Structure classify(Poset p);

 private:
  std::optional<std::size_t> lookup(const std::vector<int>& table, std::size_t a, std::size_t b) const {
    int v = table[a * size() + b];
    if (v < 0) return std::nullopt;
    return static_cast<std::size_t>(v);
  }

  Poset base_;
  Kind kind_ = Kind::poset;
  std::vector<Mask> down_;
  std::vector<int> meet_;
  std::vector<int> join_;
  std::optional<std::size_t> top_;
  std::optional<std::size_t> bottom_;
  std::vector<int> complement_;
};

namespace detail {

// Greatest element of `candidates` that lies above all of them, i.e. the supremum within it.
inline int greatest_in(const std::vector<Mask>& down, Mask candidates) {
  if (candidates == 0) return Structure::kUndefined;
  int found = Structure::kUndefined;
  for_each_bit(candidates, [&](std::size_t m) {
    if (found < 0 && subset_of(candidates, down[m])) found = static_cast<int>(m);
  });
  return found;
}

inline int least_in(const Poset& p, Mask candidates) {
  if (candidates == 0) return Structure::kUndefined;
  int found = Structure::kUndefined;
  for_each_bit(candidates, [&](std::size_t m) {
    if (found < 0 && subset_of(candidates, p.up(m))) found = static_cast<int>(m);
  });
  return found;
}

}  // namespace detail

/// Computes operation tables from the order and the strongest kind the poset supports.
inline Structure classify(Poset p) {
  Structure s;
  const std::size_t n = p.size();
  s.down_.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.down_[i] = p.down(i);
  s.meet_.assign(n * n, Structure::kUndefined);
  s.join_.assign(n * n, Structure::kUndefined);
  bool all_meets = true;
  bool all_joins = true;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      int m = detail::greatest_in(s.down_, s.down_[a] & s.down_[b]);
      int j = detail::least_in(p, p.up(a) & p.up(b));
      s.meet_[a * n + b] = m;
      s.join_[a * n + b] = j;
      all_meets = all_meets && m >= 0;
      all_joins = all_joins && j >= 0;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (s.down_[i] == p.all()) s.top_ = i;
    if (p.up(i) == p.all()) s.bottom_ = i;
  }
  s.base_ = std::move(p);

  if (!s.top_ || !all_meets) return s;
  s.kind_ = Kind::meet_semilattice;
  // A finite meet-semilattice with a top is a lattice, so bottom and all joins exist from here on.
  if (!s.bottom_ || !all_joins) return s;

  auto meet = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(s.meet_[a * n + b]); };
  auto join = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(s.join_[a * n + b]); };

  bool distributive = true;
  for (std::size_t a = 0; a < n && distributive; ++a) {
    for (std::size_t b = 0; b < n && distributive; ++b) {
      for (std::size_t c = 0; c < n && distributive; ++c) {
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) distributive = false;
      }
    }
  }
  if (!distributive) {
    // Binary disjoint joins distributing suffices: (a v b) is then disjoint from any c disjoint
    // from both, so longer disjoint families reduce to the binary case by induction.
    const std::size_t bot = *s.bottom_;
    bool dd = true;
    for (std::size_t a = 0; a < n && dd; ++a) {
      for (std::size_t b = 0; b < n && dd; ++b) {
        if (meet(a, b) != bot) continue;
        for (std::size_t c = 0; c < n && dd; ++c) {
          if (meet(join(a, b), c) != join(meet(a, c), meet(b, c))) dd = false;
        }
      }
    }
    if (dd) s.kind_ = Kind::dd_lattice;
    return s;
  }
  s.kind_ = Kind::distributive_lattice;

  s.complement_.assign(n, Structure::kUndefined);
  bool complemented = true;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (meet(a, b) == *s.bottom_ && join(a, b) == *s.top_) {
        s.complement_[a] = static_cast<int>(b);
        break;
      }
    }
    complemented = complemented && s.complement_[a] >= 0;
  }
  if (complemented) {
    s.kind_ = Kind::boolean_algebra;
  } else {
    s.complement_.clear();
  }
  return s;
}

/// The structure of a family of sets ordered by inclusion.
inline Structure classify_family(const SetFamily& family, const std::vector<std::string>& element_labels) {
  return classify(inclusion_poset(family, element_labels));
}

/// Powerset of k atoms; element index equals its bitmask.
inline Structure powerset_structure(std::size_t k) {
  if (k > 6) fail(Errc::carrier_too_large, "powerset target limited to 6 atoms");
  std::vector<Mask> all;
  for (Mask m = 0; m <= full_mask(k); ++m) all.push_back(m);
  return classify_family(SetFamily(k, std::move(all)), index_labels(k));
}

/// Chain 0 < 1 < ... < n-1 with the given labels.
inline Structure chain(const std::vector<std::string>& labels) {
  Relation r(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i; j < labels.size(); ++j) r.set(i, j);
  }
  return classify(Poset(labels, r));
}

inline Structure antichain(const std::vector<std::string>& labels) {
  return classify(Poset(labels, Relation::identity(labels.size())));
}

}  // namespace ordua
