#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cofinite/errors.hpp"

namespace cofinite {

using Nat = std::int64_t;

// Finite subset of the positive integers, kept strictly sorted.
class FiniteSet {
 public:
  FiniteSet() = default;
  explicit FiniteSet(std::vector<Nat> elems);

  bool contains(Nat n) const;
  bool subset_of(const FiniteSet& other) const;
  FiniteSet united(const FiniteSet& other) const;

  bool empty() const { return elems_.empty(); }
  Nat size() const { return static_cast<Nat>(elems_.size()); }
  Nat max() const { return elems_.empty() ? 0 : elems_.back(); }
  const std::vector<Nat>& values() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool operator==(const FiniteSet&) const = default;

 private:
  std::vector<Nat> elems_;
};

// Subset of the positive integers with finite complement, stored as the
// complement ("holes").
class CofiniteSet {
 public:
  CofiniteSet() = default;  // all of N
  explicit CofiniteSet(FiniteSet holes) : holes_(std::move(holes)) {}
  static CofiniteSet full() { return CofiniteSet(); }

  bool contains(Nat n) const { return n >= 1 && !holes_.contains(n); }
  // k-th smallest member, 1-based; total for every k >= 1.
  Nat kth(Nat k) const;
  // Position of a member in the increasing enumeration (inverse of kth).
  Nat rank(Nat n) const;
  bool subset_of(const CofiniteSet& other) const;
  CofiniteSet without(const FiniteSet& removed) const;

  const FiniteSet& holes() const { return holes_; }
  Nat max_hole() const { return holes_.max(); }

  bool operator==(const CofiniteSet&) const = default;

 private:
  FiniteSet holes_;
};

CofiniteSet intersect(const CofiniteSet& a, const CofiniteSet& b);

// Injective partial selfmap of the positive integers with cofinite domain and
// range. Stored as finitely many exceptional pairs plus a shifted tail:
//
//   n |-> n + shift          for n >= tail_start
//   x |-> exceptions[x]      for the finitely many exceptional x < tail_start
//
// and nothing else is in the domain. The form is canonical: tail_start is the
// least threshold such that every n >= tail_start is in the domain and maps by
// the shift, so structural equality coincides with pointwise equality.
// Injectivity forces every exception value below tail_start + shift.
class PartialBijection {
 public:
  PartialBijection() = default;  // identity

  // Builds the canonical representative of the map described by `exceptions`
  // (which override the tail where keys overlap it) together with the tail
  // n |-> n + shift for n >= tail_start. Throws NonPositiveValue or
  // InjectivityViolation when the description is not a valid element.
  static PartialBijection canonicalize(const std::map<Nat, Nat>& exceptions,
                                       Nat tail_start, Nat shift);

  std::optional<Nat> apply(Nat n) const;
  // Left-to-right composition: (*this) first, `then` second.
  PartialBijection compose(const PartialBijection& then) const;
  PartialBijection invert() const;

  Nat tail_start() const { return tail_start_; }
  Nat shift() const { return shift_; }
  // (threshold, offset): apply(n) == n + offset for all n >= threshold, with
  // threshold minimal under full-tail semantics.
  std::pair<Nat, Nat> eventual_shift() const { return {tail_start_, shift_}; }
  const std::vector<std::pair<Nat, Nat>>& exceptions() const {
    return exceptions_;
  }

  CofiniteSet dom() const;
  CofiniteSet ran() const;

  bool is_idempotent() const;
  // Membership in the subsemigroup of monotone maps.
  bool is_monotone() const;
  bool is_unit() const;

  bool operator==(const PartialBijection&) const = default;

 private:
  std::vector<std::pair<Nat, Nat>> exceptions_;  // sorted by key, keys < tail_start_
  Nat tail_start_ = 1;
  Nat shift_ = 0;
};

inline PartialBijection operator*(const PartialBijection& a,
                                  const PartialBijection& b) {
  return a.compose(b);
}

inline PartialBijection identity() { return PartialBijection(); }

// The monotone map sending the k-th member of `from` to the k-th member of
// `to` for every k.
PartialBijection order_isomorphism(const CofiniteSet& from,
                                   const CofiniteSet& to);

// Identity restricted to the given cofinite set.
PartialBijection partial_identity(const CofiniteSet& on);

}  // namespace cofinite
