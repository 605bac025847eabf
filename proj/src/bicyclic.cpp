#include "cofinite/bicyclic.hpp"

#include <algorithm>

namespace cofinite::bicyclic {

BicyclicWord word_mul(BicyclicWord u, BicyclicWord v) {
  const Nat m = std::min(u.p_pow, v.q_pow);
  return {u.q_pow + v.q_pow - m, u.p_pow + v.p_pow - m};
}

PartialBijection up_shift() {
  return PartialBijection::canonicalize({}, 1, 1);
}

PartialBijection down_shift() {
  return PartialBijection::canonicalize({}, 2, -1);
}

PartialBijection embed(BicyclicWord w) {
  return PartialBijection::canonicalize({}, w.q_pow + 1, w.p_pow - w.q_pow);
}

std::optional<BicyclicWord> recognize(const PartialBijection& a) {
  if (!a.exceptions().empty()) return std::nullopt;
  return BicyclicWord{a.tail_start() - 1, a.tail_start() + a.shift() - 1};
}

PartialBijection projection_idempotent(const PartialBijection& g) {
  // Identity on {m, m+1, ...} where m covers both the tail and its image;
  // canonical injectivity keeps every exception value below m, so both
  // products with g are exception-free.
  const Nat m = std::max(g.tail_start(), g.tail_start() + g.shift());
  return PartialBijection::canonicalize({}, m, 0);
}

}  // namespace cofinite::bicyclic
