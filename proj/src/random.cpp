#include "cofinite/random.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

namespace cofinite {

std::vector<Nat> Rng::sample_distinct(Nat lo, Nat hi, Nat count) {
  if (count <= 0) return {};
  assert(hi - lo + 1 >= count);
  std::vector<Nat> pool(static_cast<std::size_t>(hi - lo + 1));
  std::iota(pool.begin(), pool.end(), lo);
  for (Nat i = 0; i < count; ++i) {
    const Nat j = range(i, static_cast<Nat>(pool.size()) - 1);
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  pool.resize(static_cast<std::size_t>(count));
  std::sort(pool.begin(), pool.end());
  return pool;
}

PartialBijection random_element(Rng& rng, const SampleProfile& profile) {
  for (;;) {
    const Nat tail_start = rng.range(1, profile.max_position + 1);
    const Nat shift = rng.range(profile.min_shift, profile.max_shift);
    if (tail_start + shift < 1) continue;
    const Nat most = std::min(profile.max_exceptions, tail_start - 1);
    const Nat count = rng.range(0, most);
    if (count > tail_start + shift - 1) continue;  // no injective assignment
    const std::vector<Nat> keys = rng.sample_distinct(1, tail_start - 1, count);
    std::vector<Nat> values = rng.sample_distinct(1, tail_start + shift - 1, count);
    rng.shuffle(values);
    std::map<Nat, Nat> pairs;
    for (Nat i = 0; i < count; ++i)
      pairs.emplace(keys[static_cast<std::size_t>(i)],
                    values[static_cast<std::size_t>(i)]);
    return PartialBijection::canonicalize(pairs, tail_start, shift);
  }
}

PartialBijection random_idempotent(Rng& rng, const SampleProfile& profile) {
  const Nat bound = std::max<Nat>(profile.max_position, 1);
  const Nat holes = rng.range(0, std::min(profile.max_exceptions, bound));
  const std::vector<Nat> removed = rng.sample_distinct(1, bound, holes);
  return partial_identity(CofiniteSet(FiniteSet(removed)));
}

}  // namespace cofinite
