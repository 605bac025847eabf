#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cofinite/partial_bijection.hpp"

namespace cofinite {

// Deterministic source of randomness; all sampling in the library goes
// through explicit seeds so suites reproduce exactly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix(seed)) {}
  Rng(std::uint64_t seed, std::uint64_t stream)
      : engine_(mix(mix(seed) + stream)) {}

  std::uint64_t next() { return engine_(); }

  // Uniform-ish draw from [lo, hi], inclusive.
  Nat range(Nat lo, Nat hi) {
    if (hi <= lo) return lo;
    return lo + static_cast<Nat>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // `count` distinct values from [lo, hi], sorted ascending.
  std::vector<Nat> sample_distinct(Nat lo, Nat hi, Nat count);

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[static_cast<std::size_t>(range(0, static_cast<Nat>(i) - 1))]);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
};

// Bounds for the element generator. Exception keys and domain holes stay in
// {1..max_position} (so tail_start <= max_position + 1), at most
// max_exceptions exceptional pairs, and the eventual shift is drawn from
// [min_shift, max_shift]. Invalid draws (not enough room for injective
// values) are rejected and resampled.
struct SampleProfile {
  Nat max_exceptions = 3;
  Nat max_position = 8;
  Nat min_shift = -3;
  Nat max_shift = 3;
};

PartialBijection random_element(Rng& rng, const SampleProfile& profile);
PartialBijection random_idempotent(Rng& rng, const SampleProfile& profile);

}  // namespace cofinite
