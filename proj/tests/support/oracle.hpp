#pragma once

// Test-side oracles, independent of the library's composition and solver
// paths: maps are modelled as their graphs on a finite window, composition
// is literal pointwise chaining, and bounded universes are enumerated
// exhaustively.

#include <map>
#include <optional>
#include <vector>

#include "cofinite/partial_bijection.hpp"

namespace oracle {

using cofinite::Nat;
using cofinite::PartialBijection;

// The graph of `a` restricted to 1..limit, read off pointwise.
inline std::map<Nat, Nat> graph_upto(const PartialBijection& a, Nat limit) {
  std::map<Nat, Nat> graph;
  for (Nat n = 1; n <= limit; ++n)
    if (const auto y = a.apply(n)) graph.emplace(n, *y);
  return graph;
}

// Pointwise composition of graphs: first `f`, then `g` (which must be a
// graph on a window large enough to cover f's values).
inline std::map<Nat, Nat> chain(const std::map<Nat, Nat>& f,
                                const std::map<Nat, Nat>& g) {
  std::map<Nat, Nat> out;
  for (const auto& [x, mid] : f) {
    const auto it = g.find(mid);
    if (it != g.end()) out.emplace(x, it->second);
  }
  return out;
}

// Does `a` agree with `graph` on 1..limit (definedness included)?
inline bool agrees_upto(const PartialBijection& a,
                        const std::map<Nat, Nat>& graph, Nat limit) {
  for (Nat n = 1; n <= limit; ++n) {
    const auto expected = graph.find(n);
    const auto got = a.apply(n);
    if (expected == graph.end()) {
      if (got) return false;
    } else if (!got || *got != expected->second) {
      return false;
    }
  }
  return true;
}

// Every canonical element whose domain holes and exception keys lie in
// {1..dom_bound}, whose range holes and exception values lie in
// {1..ran_bound}, and with |shift| <= shift_bound. Equivalently: tail_start
// at most dom_bound + 1 and tail image start at most ran_bound + 1.
// Enumerates raw encodings (tail start, shift, keys, injective values) and
// keeps exactly the canonical ones.
inline std::vector<PartialBijection> enumerate_box(Nat dom_bound, Nat ran_bound,
                                                   Nat shift_bound) {
  std::vector<PartialBijection> universe;
  for (Nat tail_start = 1; tail_start <= dom_bound + 1; ++tail_start) {
    for (Nat shift = -shift_bound; shift <= shift_bound; ++shift) {
      const Nat tail_image = tail_start + shift;
      if (tail_image < 1 || tail_image > ran_bound + 1) continue;

      std::vector<Nat> keys;
      std::map<Nat, Nat> pairs;
      std::vector<bool> value_used(static_cast<std::size_t>(tail_image), false);

      auto fill_values = [&](auto&& self, std::size_t at) -> void {
        if (at == keys.size()) {
          // Skip the one non-canonical raw shape: a last pair that only
          // restates the tail.
          const auto last = pairs.find(tail_start - 1);
          if (last != pairs.end() && last->second == tail_start - 1 + shift)
            return;
          universe.push_back(
              PartialBijection::canonicalize(pairs, tail_start, shift));
          return;
        }
        for (Nat value = 1; value < tail_image; ++value) {
          if (value_used[static_cast<std::size_t>(value)]) continue;
          value_used[static_cast<std::size_t>(value)] = true;
          pairs[keys[at]] = value;
          self(self, at + 1);
          pairs.erase(keys[at]);
          value_used[static_cast<std::size_t>(value)] = false;
        }
      };

      auto pick_keys = [&](auto&& self, Nat from) -> void {
        fill_values(fill_values, 0);
        for (Nat k = from; k < tail_start; ++k) {
          keys.push_back(k);
          self(self, k + 1);
          keys.pop_back();
        }
      };

      pick_keys(pick_keys, 1);
    }
  }
  return universe;
}

inline std::vector<PartialBijection> enumerate_box(Nat hole_bound,
                                                   Nat shift_bound) {
  return enumerate_box(hole_bound, hole_bound, shift_bound);
}

}  // namespace oracle
