#pragma once

#include <map>
#include <vector>

#include "cofinite/partial_bijection.hpp"
#include "cofinite/random.hpp"

namespace cofinite::green {

enum class Parity { even, odd };

// Permutation of the positive integers moving only finitely many points.
// Only moved points are stored; parity comes from the cycle decomposition.
class FinPermutation {
 public:
  FinPermutation() = default;  // identity

  // Validates that `moved` permutes its (finite) support; fixed points are
  // dropped rather than stored.
  static FinPermutation from_moved(const std::map<Nat, Nat>& moved);
  static FinPermutation transposition(Nat a, Nat b);

  Nat apply(Nat n) const;
  // Left-to-right: (*this) first, `then` second.
  FinPermutation compose(const FinPermutation& then) const;
  FinPermutation invert() const;
  Parity parity() const;

  bool is_identity() const { return moved_.empty(); }
  const std::vector<std::pair<Nat, Nat>>& moved() const { return moved_; }

  bool operator==(const FinPermutation&) const = default;

 private:
  std::vector<std::pair<Nat, Nat>> moved_;  // sorted by key, no fixed points
};

inline FinPermutation operator*(const FinPermutation& a,
                                const FinPermutation& b) {
  return a.compose(b);
}

FinPermutation random_permutation(Rng& rng, Nat max_support, Nat max_moved);

// The Green relations: domains equal, ranges equal, or both.
bool is_r(const PartialBijection& a, const PartialBijection& b);
bool is_l(const PartialBijection& a, const PartialBijection& b);
bool is_h(const PartialBijection& a, const PartialBijection& b);

// A monotone element mu with dom mu = dom a and ran mu = ran b, so that
// a R mu and mu L b. Total: the monoid is bisimple.
PartialBijection d_witness(const PartialBijection& a, const PartialBijection& b);

// Natural partial order on idempotents: e <= f iff dom e is contained in
// dom f (equivalently ef = fe = e). Throws NotIdempotent.
bool nat_leq(const PartialBijection& e, const PartialBijection& f);
PartialBijection meet(const PartialBijection& e, const PartialBijection& f);

// The isomorphism between the idempotent semilattice and finite sets under
// reverse inclusion: an idempotent maps to the complement of its domain.
FiniteSet to_finite_set(const PartialBijection& e);
PartialBijection from_finite_set(const FiniteSet& holes);

// For idempotents e, f: a monotone element a with a a^-1 = e, a^-1 a = f,
// matching the k-th domain member of e to the k-th of f.
PartialBijection connecting_element(const PartialBijection& e,
                                    const PartialBijection& f);

// Elements (left, right) with left * a * right == b, built by order-matching;
// total for every pair, which is what simplicity means here.
struct SimplicityWitness {
  PartialBijection left;
  PartialBijection right;
};
SimplicityWitness simplicity_witness(const PartialBijection& a,
                                     const PartialBijection& b);

// Strictly descending chain e = e_0 > e_1 > ... of `count` idempotents, each
// step removing the least remaining domain point.
std::vector<PartialBijection> omega_chain(const PartialBijection& e, Nat count);

// Units (elements with full domain and range) are exactly the finitely
// supported permutations.
FinPermutation unit_to_perm(const PartialBijection& a);
PartialBijection perm_to_unit(const FinPermutation& p);

// The isomorphism from the maximal subgroup at e onto the finitely supported
// permutations, conjugating by the increasing enumeration of dom e.
// Requires a a^-1 = a^-1 a = e.
FinPermutation h_class_iso(const PartialBijection& e, const PartialBijection& a);
// Inverse direction: the member of the maximal subgroup at e acting as p on
// the enumeration of dom e.
PartialBijection h_class_member(const PartialBijection& e,
                                const FinPermutation& p);

}  // namespace cofinite::green
