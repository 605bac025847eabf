#include "cofinite/solver.hpp"

#include <algorithm>
#include <map>

#include "cofinite/codec.hpp"

namespace cofinite::solver {

namespace {

void sort_by_text(std::vector<PartialBijection>& solutions) {
  std::sort(solutions.begin(), solutions.end(),
            [](const PartialBijection& x, const PartialBijection& y) {
              return encode(x) < encode(y);
            });
  solutions.erase(std::unique(solutions.begin(), solutions.end()),
                  solutions.end());
}

// Visits every injection of a `size`-subset of `slots` into `targets`,
// subsets by size then position, assignments lexicographically.
template <class Fn>
void for_each_injection(const std::vector<Nat>& slots,
                        const std::vector<Nat>& targets, const Fn& fn) {
  const std::size_t limit = std::min(slots.size(), targets.size());
  std::vector<std::size_t> chosen;
  std::vector<bool> used(targets.size(), false);
  std::map<Nat, Nat> assignment;

  auto assign = [&](auto&& self, std::size_t at) -> void {
    if (at == chosen.size()) {
      fn(assignment);
      return;
    }
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (used[t]) continue;
      used[t] = true;
      assignment[slots[chosen[at]]] = targets[t];
      self(self, at + 1);
      assignment.erase(slots[chosen[at]]);
      used[t] = false;
    }
  };

  auto subsets = [&](auto&& self, std::size_t from, std::size_t remaining) -> void {
    if (remaining == 0) {
      assign(assign, 0);
      return;
    }
    for (std::size_t i = from; i + remaining <= slots.size(); ++i) {
      chosen.push_back(i);
      self(self, i + 1, remaining - 1);
      chosen.pop_back();
    }
  };

  for (std::size_t size = 0; size <= limit; ++size) subsets(subsets, 0, size);
}

}  // namespace

bool SolutionSet::contains(const PartialBijection& x) const {
  return std::find(solutions.begin(), solutions.end(), x) != solutions.end();
}

SolutionSet solve_right(const PartialBijection& a, const PartialBijection& b) {
  SolutionSet out;
  out.free_slots_a = a.ran().holes().size();
  out.free_slots_b = b.ran().holes().size();
  if (!b.dom().subset_of(a.dom())) return out;

  // Forced part: (t)a |-> (t)b for every t in dom b. Beyond
  // max(tail a, tail b) both operands are in their tails, so the core is a
  // pure shift from there on.
  const Nat threshold = std::max(a.tail_start(), b.tail_start());
  std::map<Nat, Nat> core;
  for (Nat t = 1; t < threshold; ++t) {
    const auto image = b.apply(t);
    if (!image) continue;
    core.emplace(*a.apply(t), *image);
  }
  const Nat tail_start = threshold + a.shift();
  const Nat shift = b.shift() - a.shift();

  const std::vector<Nat> slots = a.ran().holes().values();
  const std::vector<Nat> targets = b.ran().holes().values();
  for_each_injection(slots, targets, [&](const std::map<Nat, Nat>& extra) {
    std::map<Nat, Nat> pairs = core;
    pairs.insert(extra.begin(), extra.end());
    PartialBijection candidate =
        PartialBijection::canonicalize(pairs, tail_start, shift);
    if (a.compose(candidate) == b) out.solutions.push_back(candidate);
  });
  sort_by_text(out.solutions);
  return out;
}

SolutionSet solve_left(const PartialBijection& a, const PartialBijection& b) {
  SolutionSet dual = solve_right(a.invert(), b.invert());
  SolutionSet out;
  out.free_slots_a = a.dom().holes().size();
  out.free_slots_b = b.dom().holes().size();
  out.solutions.reserve(dual.solutions.size());
  for (const PartialBijection& x : dual.solutions)
    out.solutions.push_back(x.invert());
  sort_by_text(out.solutions);
  return out;
}

std::uint64_t count_right(const PartialBijection& a, const PartialBijection& b) {
  if (!b.dom().subset_of(a.dom())) return 0;
  const std::uint64_t slots_a = a.ran().holes().size();
  const std::uint64_t slots_b = b.ran().holes().size();
  std::uint64_t total = 0;
  const std::uint64_t most = std::min(slots_a, slots_b);
  for (std::uint64_t s = 0; s <= most; ++s) {
    std::uint64_t choose = 1;  // C(slots_a, s)
    for (std::uint64_t i = 0; i < s; ++i)
      choose = choose * (slots_a - i) / (i + 1);
    std::uint64_t arrange = 1;  // slots_b! / (slots_b - s)!
    for (std::uint64_t i = 0; i < s; ++i) arrange *= slots_b - i;
    total += choose * arrange;
  }
  return total;
}

FPropertyReport check_f_property(const PartialBijection& a,
                                 const PartialBijection& b) {
  return {solve_right(a, b), solve_left(a, b)};
}

green::SimplicityWitness check_s_property(const PartialBijection& a,
                                          const PartialBijection& b) {
  green::SimplicityWitness w = green::simplicity_witness(a, b);
  if (!(w.left.compose(a).compose(w.right) == b))
    throw Error("simplicity witness failed to compose");
  return w;
}

}  // namespace cofinite::solver
