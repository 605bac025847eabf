#include "cofinite/topology.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace cofinite::topo {

namespace {

FiniteSet image_of(const PartialBijection& a, const FiniteSet& points) {
  std::vector<Nat> out;
  out.reserve(points.values().size());
  for (Nat x : points) {
    const auto y = a.apply(x);
    if (!y) throw FixedSetOutsideDomain("point " + std::to_string(x) +
                                        " is outside the domain");
    out.push_back(*y);
  }
  return FiniteSet(std::move(out));
}

// Members of `big` missing from `small`, for small a subset of big.
FiniteSet members_lost(const CofiniteSet& big, const CofiniteSet& small) {
  std::vector<Nat> out;
  for (Nat hole : small.holes())
    if (big.contains(hole)) out.push_back(hole);
  return FiniteSet(std::move(out));
}

// Least point of dom where the two maps disagree; they must disagree
// somewhere when distinct with equal domains.
Nat least_disagreement(const PartialBijection& a, const PartialBijection& b) {
  const Nat bound = std::max(a.tail_start(), b.tail_start());
  for (Nat n = 1; n <= bound; ++n) {
    const auto left = a.apply(n);
    if (left && *left != *b.apply(n)) return n;
  }
  assert(false && "equal maps passed to least_disagreement");
  return 1;
}

// The finite map forced by agreement with both centers on their fixed sets;
// nullopt when it is not a well-defined injection.
std::optional<std::map<Nat, Nat>> forced_map(const BasicNbhd& u,
                                             const BasicNbhd& v) {
  std::map<Nat, Nat> forced;
  for (Nat x : u.fixed()) forced.emplace(x, *u.center().apply(x));
  for (Nat x : v.fixed()) {
    const Nat y = *v.center().apply(x);
    auto [it, inserted] = forced.emplace(x, y);
    if (!inserted && it->second != y) return std::nullopt;
  }
  std::vector<Nat> values;
  values.reserve(forced.size());
  for (const auto& [x, y] : forced) values.push_back(y);
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end())
    return std::nullopt;
  return forced;
}

}  // namespace

BasicNbhd::BasicNbhd(NbhdKind kind, PartialBijection center, FiniteSet fixed)
    : kind_(kind), center_(std::move(center)), fixed_(std::move(fixed)) {
  const CofiniteSet domain = center_.dom();
  for (Nat x : fixed_)
    if (!domain.contains(x))
      throw FixedSetOutsideDomain("fixed point " + std::to_string(x) +
                                  " is outside the center's domain");
}

bool contains(const BasicNbhd& u, const PartialBijection& candidate) {
  for (Nat x : u.fixed()) {
    const auto y = candidate.apply(x);
    if (!y || *y != *u.center().apply(x)) return false;
  }
  if (u.kind() == NbhdKind::F)
    return candidate.dom() == u.center().dom() &&
           candidate.ran() == u.center().ran();
  return candidate.dom().subset_of(u.center().dom());
}

ProductRefinement product_refinement(NbhdKind kind, const PartialBijection& a,
                                     const PartialBijection& b,
                                     const FiniteSet& fixed) {
  const PartialBijection product = a.compose(b);
  const CofiniteSet product_dom = product.dom();
  for (Nat x : fixed)
    if (!product_dom.contains(x))
      throw FixedSetOutsideDomain("fixed point " + std::to_string(x) +
                                  " is outside the product's domain");

  // Points of dom a whose image misses dom b: a member of the left
  // neighborhood must keep sending them outside, or the product's domain
  // grows.
  FiniteSet left = fixed.united(members_lost(a.dom(), product_dom));
  FiniteSet right = image_of(a, fixed);
  if (kind == NbhdKind::F) {
    // Points of dom b outside ran a: pinning them keeps the product's range
    // exact.
    right = right.united(members_lost(b.dom(), intersect(b.dom(), a.ran())));
  }
  return {std::move(left), std::move(right)};
}

BasicNbhd inversion_image(const BasicNbhd& u) {
  if (u.kind() != NbhdKind::F)
    throw KindMismatch("inversion_image applies to the exact-frame kind");
  return BasicNbhd(NbhdKind::F, u.center().invert(),
                   image_of(u.center(), u.fixed()));
}

std::optional<PartialBijection> intersection_witness(const BasicNbhd& u,
                                                     const BasicNbhd& v) {
  if (u.kind() != v.kind())
    throw KindMismatch("neighborhoods of different kinds");
  const PartialBijection& a = u.center();
  const PartialBijection& b = v.center();

  if (u.kind() == NbhdKind::F) {
    if (!(a.dom() == b.dom()) || !(a.ran() == b.ran())) return std::nullopt;
  } else {
    const CofiniteSet dom_a = a.dom();
    const CofiniteSet dom_b = b.dom();
    for (Nat x : u.fixed())
      if (!dom_b.contains(x)) return std::nullopt;
    for (Nat x : v.fixed())
      if (!dom_a.contains(x)) return std::nullopt;
  }

  const auto forced = forced_map(u, v);
  if (!forced) return std::nullopt;

  std::vector<Nat> keys;
  std::vector<Nat> values;
  for (const auto& [x, y] : *forced) {
    keys.push_back(x);
    values.push_back(y);
  }
  const CofiniteSet unforced =
      intersect(a.dom(), b.dom()).without(FiniteSet(keys));
  const CofiniteSet target =
      (u.kind() == NbhdKind::F ? a.ran() : CofiniteSet::full())
          .without(FiniteSet(values));
  const PartialBijection matched = order_isomorphism(unforced, target);

  std::map<Nat, Nat> pairs(matched.exceptions().begin(),
                           matched.exceptions().end());
  pairs.insert(forced->begin(), forced->end());
  PartialBijection witness = PartialBijection::canonicalize(
      pairs, matched.tail_start(), matched.shift());
  assert(contains(u, witness) && contains(v, witness));
  return witness;
}

bool intersect_empty(const BasicNbhd& u, const BasicNbhd& v) {
  return !intersection_witness(u, v).has_value();
}

SeparationWitness separation_witness(const PartialBijection& a,
                                     const PartialBijection& b,
                                     NbhdKind kind) {
  if (a == b) throw EqualElements("cannot separate an element from itself");
  const CofiniteSet dom_a = a.dom();
  const CofiniteSet dom_b = b.dom();

  if (kind == NbhdKind::F) {
    if (!(dom_a == dom_b) || !(a.ran() == b.ran())) return {{}, {}};
    const Nat x = least_disagreement(a, b);
    return {FiniteSet({x}), FiniteSet({x})};
  }

  if (dom_a == dom_b) {
    const Nat x = least_disagreement(a, b);
    return {FiniteSet({x}), FiniteSet({x})};
  }
  if (dom_b.subset_of(dom_a)) {
    // Pin a point a keeps but b lacks; any common member would need it.
    const Nat y = members_lost(dom_a, dom_b).values().front();
    return {FiniteSet({y}), FiniteSet({dom_b.kth(1)})};
  }
  if (dom_a.subset_of(dom_b)) {
    const Nat x = members_lost(dom_b, dom_a).values().front();
    return {FiniteSet({dom_a.kth(1)}), FiniteSet({x})};
  }
  const Nat y = members_lost(dom_a, dom_b).values().front();
  const Nat x = members_lost(dom_b, dom_a).values().front();
  return {FiniteSet({y}), FiniteSet({x})};
}

PartialBijection random_member(const BasicNbhd& u, Rng& rng) {
  const PartialBijection& center = u.center();
  const CofiniteSet domain = center.dom();
  const Nat bound =
      std::max({center.tail_start(), u.fixed().max(), domain.max_hole()}) + 4;

  std::vector<Nat> pool;
  for (Nat n = 1; n <= bound; ++n)
    if (domain.contains(n) && !u.fixed().contains(n)) pool.push_back(n);

  // Re-match the images of a few unfixed points among themselves.
  const Nat pool_size = static_cast<Nat>(pool.size());
  const Nat rematch = rng.range(0, std::min<Nat>(4, pool_size));
  std::vector<Nat> indices =
      rng.sample_distinct(0, pool_size - 1, rematch);
  std::vector<Nat> shuffled;
  for (Nat i : indices) shuffled.push_back(pool[static_cast<std::size_t>(i)]);
  rng.shuffle(shuffled);

  std::map<Nat, Nat> overrides;
  for (std::size_t i = 0; i < shuffled.size(); ++i)
    overrides.emplace(pool[static_cast<std::size_t>(indices[i])],
                      *center.apply(shuffled[i]));

  // The weak kind may also drop finitely many unfixed domain points.
  FiniteSet deleted;
  if (u.kind() == NbhdKind::WF) {
    const Nat drop = rng.range(0, std::min<Nat>(2, pool_size));
    std::vector<Nat> holes;
    for (Nat i : rng.sample_distinct(0, pool_size - 1, drop))
      holes.push_back(pool[static_cast<std::size_t>(i)]);
    deleted = FiniteSet(std::move(holes));
  }

  const Nat tail_start = bound + 1;
  std::map<Nat, Nat> pairs;
  for (Nat n = 1; n < tail_start; ++n) {
    if (!domain.contains(n) || deleted.contains(n)) continue;
    const auto moved = overrides.find(n);
    pairs.emplace(n, moved != overrides.end() ? moved->second
                                              : *center.apply(n));
  }
  PartialBijection member =
      PartialBijection::canonicalize(pairs, tail_start, center.shift());
  assert(contains(u, member));
  return member;
}

PartialBijection random_member(const BasicNbhd& u, std::uint64_t seed) {
  Rng rng(seed);
  return random_member(u, rng);
}

}  // namespace cofinite::topo
