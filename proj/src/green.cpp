#include "cofinite/green.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <string>

namespace cofinite::green {

namespace {

void require_idempotent(const PartialBijection& e, const char* who) {
  if (!e.is_idempotent())
    throw NotIdempotent(std::string(who) + " requires an idempotent operand");
}

}  // namespace

FinPermutation FinPermutation::from_moved(const std::map<Nat, Nat>& moved) {
  std::set<Nat> keys;
  std::set<Nat> values;
  FinPermutation out;
  for (const auto& [key, value] : moved) {
    if (key < 1 || value < 1)
      throw NonPositiveValue("permutation entries must be positive");
    if (key == value) continue;
    if (!values.insert(value).second)
      throw InjectivityViolation("two points map to " + std::to_string(value));
    keys.insert(key);
    out.moved_.emplace_back(key, value);
  }
  if (keys != values)
    throw Error("map does not permute its support");
  return out;
}

FinPermutation FinPermutation::transposition(Nat a, Nat b) {
  return from_moved({{a, b}, {b, a}});
}

Nat FinPermutation::apply(Nat n) const {
  auto it = std::lower_bound(
      moved_.begin(), moved_.end(), n,
      [](const std::pair<Nat, Nat>& entry, Nat key) { return entry.first < key; });
  if (it != moved_.end() && it->first == n) return it->second;
  return n;
}

FinPermutation FinPermutation::compose(const FinPermutation& then) const {
  std::map<Nat, Nat> combined;
  for (const auto& [key, value] : moved_) combined[key] = then.apply(value);
  for (const auto& [key, value] : then.moved_)
    combined.emplace(key, value);  // only where *this fixes key
  return from_moved(combined);
}

FinPermutation FinPermutation::invert() const {
  std::map<Nat, Nat> swapped;
  for (const auto& [key, value] : moved_) swapped.emplace(value, key);
  return from_moved(swapped);
}

Parity FinPermutation::parity() const {
  // Sum of (cycle length - 1) over the cycle decomposition, mod 2.
  std::set<Nat> pending;
  for (const auto& [key, value] : moved_) pending.insert(key);
  Nat transpositions = 0;
  while (!pending.empty()) {
    const Nat start = *pending.begin();
    Nat at = start;
    do {
      pending.erase(at);
      at = apply(at);
      ++transpositions;
    } while (at != start);
    --transpositions;
  }
  return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

FinPermutation random_permutation(Rng& rng, Nat max_support, Nat max_moved) {
  const Nat count = rng.range(0, std::min(max_support, max_moved));
  std::vector<Nat> support = rng.sample_distinct(1, max_support, count);
  std::vector<Nat> images = support;
  rng.shuffle(images);
  std::map<Nat, Nat> moved;
  for (std::size_t i = 0; i < support.size(); ++i)
    moved.emplace(support[i], images[i]);
  return FinPermutation::from_moved(moved);
}

bool is_r(const PartialBijection& a, const PartialBijection& b) {
  return a.dom() == b.dom();
}

bool is_l(const PartialBijection& a, const PartialBijection& b) {
  return a.ran() == b.ran();
}

bool is_h(const PartialBijection& a, const PartialBijection& b) {
  return is_r(a, b) && is_l(a, b);
}

PartialBijection d_witness(const PartialBijection& a, const PartialBijection& b) {
  return order_isomorphism(a.dom(), b.ran());
}

bool nat_leq(const PartialBijection& e, const PartialBijection& f) {
  require_idempotent(e, "nat_leq");
  require_idempotent(f, "nat_leq");
  return e.dom().subset_of(f.dom());
}

PartialBijection meet(const PartialBijection& e, const PartialBijection& f) {
  require_idempotent(e, "meet");
  require_idempotent(f, "meet");
  return e.compose(f);
}

FiniteSet to_finite_set(const PartialBijection& e) {
  require_idempotent(e, "to_finite_set");
  return e.dom().holes();
}

PartialBijection from_finite_set(const FiniteSet& holes) {
  return partial_identity(CofiniteSet(holes));
}

PartialBijection connecting_element(const PartialBijection& e,
                                    const PartialBijection& f) {
  require_idempotent(e, "connecting_element");
  require_idempotent(f, "connecting_element");
  return order_isomorphism(e.dom(), f.dom());
}

SimplicityWitness simplicity_witness(const PartialBijection& a,
                                     const PartialBijection& b) {
  // left: k-th member of dom b to k-th member of dom a. right then has to
  // send the image under a of the k-th member of dom a to the image under b
  // of the k-th member of dom b, which is exactly a^-1 * left^-1 * b.
  PartialBijection left = order_isomorphism(b.dom(), a.dom());
  PartialBijection right = a.invert().compose(left.invert()).compose(b);
  return {std::move(left), std::move(right)};
}

std::vector<PartialBijection> omega_chain(const PartialBijection& e, Nat count) {
  require_idempotent(e, "omega_chain");
  if (count < 1) throw NonPositiveValue("chain length must be positive");
  std::vector<PartialBijection> chain;
  chain.reserve(static_cast<std::size_t>(count));
  chain.push_back(e);
  CofiniteSet domain = e.dom();
  for (Nat step = 1; step < count; ++step) {
    domain = domain.without(FiniteSet({domain.kth(1)}));
    chain.push_back(partial_identity(domain));
  }
  return chain;
}

FinPermutation unit_to_perm(const PartialBijection& a) {
  if (!a.is_unit() || a.shift() != 0)
    throw NotAUnit("element does not have full domain and range");
  std::map<Nat, Nat> moved;
  for (const auto& [key, value] : a.exceptions())
    if (key != value) moved.emplace(key, value);
  return FinPermutation::from_moved(moved);
}

PartialBijection perm_to_unit(const FinPermutation& p) {
  Nat top = 0;
  for (const auto& [key, value] : p.moved()) top = std::max({top, key, value});
  std::map<Nat, Nat> pairs;
  for (Nat n = 1; n <= top; ++n) pairs.emplace(n, p.apply(n));
  return PartialBijection::canonicalize(pairs, top + 1, 0);
}

FinPermutation h_class_iso(const PartialBijection& e, const PartialBijection& a) {
  require_idempotent(e, "h_class_iso");
  if (!(a.compose(a.invert()) == e) || !(a.invert().compose(a) == e))
    throw NotInHClass("element is not in the maximal subgroup at the idempotent");
  assert(a.shift() == 0);
  const CofiniteSet domain = e.dom();
  std::map<Nat, Nat> moved;
  for (const auto& [key, value] : a.exceptions())
    if (key != value) moved.emplace(domain.rank(key), domain.rank(value));
  return FinPermutation::from_moved(moved);
}

PartialBijection h_class_member(const PartialBijection& e,
                                const FinPermutation& p) {
  require_idempotent(e, "h_class_member");
  const CofiniteSet domain = e.dom();
  Nat top = 0;
  for (const auto& [key, value] : p.moved()) top = std::max({top, key, value});
  const Nat tail_start =
      std::max(domain.max_hole(), top == 0 ? Nat{0} : domain.kth(top)) + 1;
  std::map<Nat, Nat> pairs;
  for (Nat n = 1; n < tail_start; ++n)
    if (domain.contains(n)) pairs.emplace(n, domain.kth(p.apply(domain.rank(n))));
  return PartialBijection::canonicalize(pairs, tail_start, 0);
}

}  // namespace cofinite::green
