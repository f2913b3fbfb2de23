// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ordua/bits.hpp"
#include "ordua/error.hpp"
#include "ordua/set_family.hpp"

namespace ordua {

/// Binary relation on {0..n-1}; row(i) holds every j with i R j.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : rows_(n, 0) {
    if (n > kMaxCarrier) fail(Errc::carrier_too_large, "relation carrier exceeds 64");
  }

  static Relation identity(std::size_t n) {
    Relation r(n);
    for (std::size_t i = 0; i < n; ++i) r.set(i, i);
    return r;
  }
  static Relation total(std::size_t n) {
    Relation r(n);
    for (std::size_t i = 0; i < n; ++i) r.rows_[i] = full_mask(n);
    return r;
  }

  std::size_t size() const { return rows_.size(); }
  bool test(std::size_t i, std::size_t j) const { return has(rows_[i], j); }
  void set(std::size_t i, std::size_t j) { rows_[i] |= bit(j); }
  void reset(std::size_t i, std::size_t j) { rows_[i] &= ~bit(j); }

  /// Everything above i (including i when reflexive).
  Mask up(std::size_t i) const { return rows_[i]; }
  /// Everything below j.
  Mask down(std::size_t j) const {
    Mask m = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (test(i, j)) m |= bit(i);
    }
    return m;
  }

  bool is_reflexive() const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!test(i, i)) return false;
    }
    return true;
  }
  bool is_transitive() const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Mask reach = 0;
      for_each_bit(rows_[i], [&](std::size_t j) { reach |= rows_[j]; });
      if (!subset_of(reach, rows_[i])) return false;
    }
    return true;
  }
  bool is_antisymmetric() const { return !antisymmetry_witness().has_value(); }
  bool is_preorder() const { return is_reflexive() && is_transitive(); }
  bool is_partial_order() const { return is_preorder() && is_antisymmetric(); }

  std::optional<std::pair<std::size_t, std::size_t>> antisymmetry_witness() const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (std::size_t j = i + 1; j < rows_.size(); ++j) {
        if (test(i, j) && test(j, i)) return std::pair{i, j};
      }
    }
    return std::nullopt;
  }

  Relation reflexive_transitive_closure() const {
    Relation r = *this;
    for (std::size_t i = 0; i < r.size(); ++i) r.set(i, i);
    // Warshall over bit rows.
    for (std::size_t k = 0; k < r.size(); ++k) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (r.test(i, k)) r.rows_[i] |= r.rows_[k];
      }
    }
    return r;
  }

  Relation intersect(const Relation& o) const {
    if (o.size() != size()) fail(Errc::carrier_mismatch, "relation sizes differ");
    Relation r(size());
    for (std::size_t i = 0; i < size(); ++i) r.rows_[i] = rows_[i] & o.rows_[i];
    return r;
  }

  Relation converse() const {
    Relation r(size());
    for (std::size_t i = 0; i < size(); ++i) {
      for_each_bit(rows_[i], [&](std::size_t j) { r.set(j, i); });
    }
    return r;
  }

  /// True when every element of m has all its successors in m.
  bool is_upper(Mask m) const {
    bool ok = true;
    for_each_bit(m, [&](std::size_t i) { ok = ok && subset_of(rows_[i], m); });
    return ok;
  }
  bool is_lower(Mask m) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!has(m, i) && (rows_[i] & m) != 0) return false;
    }
    return true;
  }

  Mask upper_closure(Mask m) const {
    Mask out = m;
    for_each_bit(m, [&](std::size_t i) { out |= rows_[i]; });
    return out;
  }
  Mask lower_closure(Mask m) const {
    Mask out = m;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if ((rows_[i] & m) != 0) out |= bit(i);
    }
    return out;
  }

  Mask maximal(Mask within) const {
    Mask out = 0;
    for_each_bit(within, [&](std::size_t i) {
      if (subset_of(rows_[i] & within, bit(i) | (down(i) & within))) out |= bit(i);
    });
    return out;
  }

  /// Covering pairs (i, j): i < j strictly with nothing strictly between. Equivalent points are
  /// collapsed onto one strict layer so the result also serves preorders.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || !test(i, j) || test(j, i)) continue;
        bool covering = true;
        for (std::size_t k = 0; k < n && covering; ++k) {
          if (test(i, k) && !test(k, i) && test(k, j) && !test(j, k)) covering = false;
        }
        if (covering) out.emplace_back(i, j);
      }
    }
    return out;
  }

  const std::vector<Mask>& rows() const { return rows_; }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::vector<Mask> rows_;
};

/// Every upper set of a preorder, sorted by bitmask value.
inline std::vector<Mask> upper_sets(const Relation& r) {
  if (r.size() > 24) fail(Errc::carrier_too_large, "upper-set enumeration limited to 24 points");
  std::vector<Mask> out;
  const Mask full = full_mask(r.size());
  for (Mask m = 0;; ++m) {
    if (r.is_upper(m)) out.push_back(m);
    if (m == full) break;
  }
  return out;
}

inline std::vector<Mask> lower_sets(const Relation& r) { return upper_sets(r.converse()); }

/// A finite partial order with distinct element labels.
class Poset {
 public:
  Poset() = default;
  Poset(std::vector<std::string> labels, Relation leq) : labels_(std::move(labels)), leq_(std::move(leq)) {
    if (labels_.empty()) fail(Errc::invalid_argument, "a poset needs at least one element");
    if (labels_.size() != leq_.size()) fail(Errc::carrier_mismatch, "label count differs from relation size");
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (!seen.emplace(labels_[i], i).second) fail(Errc::duplicate_label, "label '" + labels_[i] + "'");
    }
    if (!leq_.is_preorder()) fail(Errc::invalid_argument, "order relation is not reflexive and transitive");
    if (auto w = leq_.antisymmetry_witness()) {
      fail(Errc::antisymmetry_violation,
           "cycle " + labels_[w->first] + " -> " + labels_[w->second] + " -> " + labels_[w->first]);
    }
  }

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const Relation& leq() const { return leq_; }
  bool leq(std::size_t i, std::size_t j) const { return leq_.test(i, j); }
  Mask up(std::size_t i) const { return leq_.up(i); }
  Mask down(std::size_t i) const { return leq_.down(i); }
  Mask all() const { return full_mask(size()); }

  std::optional<std::size_t> index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }

  std::string format(Mask m) const { return format_set(m, labels_); }

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  std::vector<std::string> labels_;
  Relation leq_;
};

namespace detail {

// Path from `from` to `to` (distinct) inside the generating pairs, used to name antisymmetry cycles.
inline std::vector<std::size_t> find_path(const std::vector<std::vector<std::size_t>>& adj, std::size_t from,
                                          std::size_t to) {
  std::vector<std::optional<std::size_t>> parent(adj.size());
  parent[from] = from;
  std::queue<std::size_t> q;
  q.push(from);
  while (!q.empty()) {
    std::size_t v = q.front();
    q.pop();
    if (v == to) break;
    for (std::size_t w : adj[v]) {
      if (!parent[w]) {
        parent[w] = v;
        q.push(w);
      }
    }
  }
  if (!parent[to]) return {from, to};
  std::vector<std::size_t> path;
  for (std::size_t x = to; x != from; x = *parent[x]) path.push_back(x);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace detail

/// Builds the poset generated by `pairs` (a <= b for each (a, b)) via reflexive-transitive closure.
inline Poset validate_poset(const std::vector<std::string>& labels,
                            const std::vector<std::pair<std::string, std::string>>& pairs) {
  if (labels.empty()) fail(Errc::invalid_argument, "a poset needs at least one element");
  if (labels.size() > kMaxCarrier) fail(Errc::carrier_too_large, "at most 64 elements are supported");
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], i).second) fail(Errc::duplicate_label, "label '" + labels[i] + "'");
  }
  Relation gen(labels.size());
  std::vector<std::vector<std::size_t>> adj(labels.size());
  for (const auto& [a, b] : pairs) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) fail(Errc::unknown_label, "'" + a + "'");
    if (ib == index.end()) fail(Errc::unknown_label, "'" + b + "'");
    gen.set(ia->second, ib->second);
    adj[ia->second].push_back(ib->second);
  }
  Relation closed = gen.reflexive_transitive_closure();
  if (auto w = closed.antisymmetry_witness()) {
    auto there = detail::find_path(adj, w->first, w->second);
    auto back = detail::find_path(adj, w->second, w->first);
    std::string cycle = labels[there.front()];
    for (std::size_t k = 1; k < there.size(); ++k) cycle += " -> " + labels[there[k]];
    for (std::size_t k = 1; k < back.size(); ++k) cycle += " -> " + labels[back[k]];
    fail(Errc::antisymmetry_violation, "cycle " + cycle);
  }
  return Poset(labels, std::move(closed));
}

/// Numbered labels "0", "1", ... for anonymous carriers.
inline std::vector<std::string> index_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

/// Poset of a family of sets ordered by inclusion; labels render each set with `element_labels`.
inline Poset inclusion_poset(const SetFamily& family, const std::vector<std::string>& element_labels) {
  const std::size_t n = family.size();
  if (n > kMaxCarrier) fail(Errc::carrier_too_large, "inclusion order with more than 64 members");
  Relation r(n);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(format_set(family[i], element_labels));
    for (std::size_t j = 0; j < n; ++j) {
      if (subset_of(family[i], family[j])) r.set(i, j);
    }
  }
  return Poset(std::move(labels), std::move(r));
}

}  // namespace ordua
