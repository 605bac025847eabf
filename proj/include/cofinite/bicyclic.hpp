#pragma once

#include <optional>

#include "cofinite/partial_bijection.hpp"

namespace cofinite::bicyclic {

// Normal form q^a p^b of a word in the bicyclic monoid presented by pq = 1.
// Under the embedding below, p is the up-shift and q the down-shift.
struct BicyclicWord {
  Nat q_pow = 0;
  Nat p_pow = 0;

  bool operator==(const BicyclicWord&) const = default;
};

BicyclicWord word_mul(BicyclicWord u, BicyclicWord v);

// p: n |-> n + 1 everywhere.
PartialBijection up_shift();
// q: n |-> n - 1 for n > 1.
PartialBijection down_shift();

// Monoid monomorphism onto the exception-free elements:
// q^a p^b |-> the map n |-> n - a + b on {a+1, a+2, ...}.
PartialBijection embed(BicyclicWord w);

// Partial inverse of embed: the word when the element is exception-free,
// absent otherwise.
std::optional<BicyclicWord> recognize(const PartialBijection& a);

// The idempotent e (identity on a final segment) such that both g*e and e*g
// are exception-free, hence land in the embedded bicyclic monoid.
PartialBijection projection_idempotent(const PartialBijection& g);

}  // namespace cofinite::bicyclic
