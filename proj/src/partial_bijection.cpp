#include "cofinite/partial_bijection.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <string>

namespace cofinite {

FiniteSet::FiniteSet(std::vector<Nat> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (!elems_.empty() && elems_.front() < 1)
    throw NonPositiveValue("finite set entries must be positive");
}

bool FiniteSet::contains(Nat n) const {
  return std::binary_search(elems_.begin(), elems_.end(), n);
}

bool FiniteSet::subset_of(const FiniteSet& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(),
                       elems_.begin(), elems_.end());
}

FiniteSet FiniteSet::united(const FiniteSet& other) const {
  std::vector<Nat> merged;
  merged.reserve(elems_.size() + other.elems_.size());
  std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(),
                 other.elems_.end(), std::back_inserter(merged));
  return FiniteSet(std::move(merged));
}

Nat CofiniteSet::kth(Nat k) const {
  assert(k >= 1);
  Nat member = k;
  for (Nat hole : holes_)
    if (hole <= member) ++member;
  return member;
}

Nat CofiniteSet::rank(Nat n) const {
  assert(contains(n));
  Nat below = 0;
  for (Nat hole : holes_) {
    if (hole >= n) break;
    ++below;
  }
  return n - below;
}

bool CofiniteSet::subset_of(const CofiniteSet& other) const {
  return other.holes_.subset_of(holes_);
}

CofiniteSet CofiniteSet::without(const FiniteSet& removed) const {
  return CofiniteSet(holes_.united(removed));
}

CofiniteSet intersect(const CofiniteSet& a, const CofiniteSet& b) {
  return CofiniteSet(a.holes().united(b.holes()));
}

PartialBijection PartialBijection::canonicalize(
    const std::map<Nat, Nat>& exceptions, Nat tail_start, Nat shift) {
  if (tail_start < 1) throw NonPositiveValue("tail start must be positive");
  if (tail_start + shift < 1)
    throw NonPositiveValue("tail image must stay positive");
  for (const auto& [key, value] : exceptions) {
    if (key < 1) throw NonPositiveValue("exception key must be positive");
    if (value < 1) throw NonPositiveValue("exception value must be positive");
  }

  // Exceptional pairs take precedence over the tail, so re-anchor the tail
  // past the last key and spell the overridden stretch out as pairs.
  Nat start = tail_start;
  if (!exceptions.empty())
    start = std::max(start, exceptions.rbegin()->first + 1);
  std::map<Nat, Nat> pairs = exceptions;
  for (Nat n = tail_start; n < start; ++n) pairs.emplace(n, n + shift);

  std::set<Nat> seen;
  for (const auto& [key, value] : pairs) {
    if (!seen.insert(value).second)
      throw InjectivityViolation("two points map to " + std::to_string(value));
    if (value >= start + shift)
      throw InjectivityViolation("exception value " + std::to_string(value) +
                                 " collides with a tail image");
  }

  // Fold pairs that already agree with the tail.
  while (!pairs.empty()) {
    auto last = std::prev(pairs.end());
    if (last->first != start - 1 || last->second != start - 1 + shift) break;
    pairs.erase(last);
    --start;
  }

  PartialBijection out;
  out.exceptions_.assign(pairs.begin(), pairs.end());
  out.tail_start_ = start;
  out.shift_ = shift;
  return out;
}

std::optional<Nat> PartialBijection::apply(Nat n) const {
  if (n < 1) return std::nullopt;
  if (n >= tail_start_) return n + shift_;
  auto it = std::lower_bound(
      exceptions_.begin(), exceptions_.end(), n,
      [](const std::pair<Nat, Nat>& entry, Nat key) { return entry.first < key; });
  if (it != exceptions_.end() && it->first == n) return it->second;
  return std::nullopt;
}

PartialBijection PartialBijection::compose(const PartialBijection& then) const {
  const Nat start = std::max(tail_start_, then.tail_start_ - shift_);
  std::map<Nat, Nat> pairs;
  for (Nat x = 1; x < start; ++x) {
    auto mid = apply(x);
    if (!mid) continue;
    auto out = then.apply(*mid);
    if (out) pairs.emplace(x, *out);
  }
  return canonicalize(pairs, start, shift_ + then.shift_);
}

PartialBijection PartialBijection::invert() const {
  std::map<Nat, Nat> swapped;
  for (const auto& [key, value] : exceptions_) swapped.emplace(value, key);
  return canonicalize(swapped, tail_start_ + shift_, -shift_);
}

CofiniteSet PartialBijection::dom() const {
  std::vector<Nat> holes;
  auto it = exceptions_.begin();
  for (Nat n = 1; n < tail_start_; ++n) {
    if (it != exceptions_.end() && it->first == n)
      ++it;
    else
      holes.push_back(n);
  }
  return CofiniteSet(FiniteSet(std::move(holes)));
}

CofiniteSet PartialBijection::ran() const {
  std::vector<Nat> values;
  values.reserve(exceptions_.size());
  for (const auto& [key, value] : exceptions_) values.push_back(value);
  std::sort(values.begin(), values.end());
  std::vector<Nat> holes;
  auto it = values.begin();
  for (Nat n = 1; n < tail_start_ + shift_; ++n) {
    if (it != values.end() && *it == n)
      ++it;
    else
      holes.push_back(n);
  }
  return CofiniteSet(FiniteSet(std::move(holes)));
}

bool PartialBijection::is_idempotent() const {
  if (shift_ != 0) return false;
  for (const auto& [key, value] : exceptions_)
    if (key != value) return false;
  return true;
}

bool PartialBijection::is_monotone() const {
  Nat previous = 0;
  for (const auto& [key, value] : exceptions_) {
    if (value <= previous) return false;
    previous = value;
  }
  return previous < tail_start_ + shift_;
}

bool PartialBijection::is_unit() const {
  return dom().holes().empty() && ran().holes().empty();
}

PartialBijection order_isomorphism(const CofiniteSet& from,
                                   const CofiniteSet& to) {
  const Nat missing_from = from.holes().size();
  const Nat missing_to = to.holes().size();
  const Nat threshold =
      std::max({Nat{1}, from.max_hole() + 1,
                to.max_hole() + missing_from - missing_to + 1});
  std::map<Nat, Nat> pairs;
  for (Nat n = 1; n < threshold; ++n)
    if (from.contains(n)) pairs.emplace(n, to.kth(from.rank(n)));
  return PartialBijection::canonicalize(pairs, threshold,
                                        missing_to - missing_from);
}

PartialBijection partial_identity(const CofiniteSet& on) {
  return order_isomorphism(on, on);
}

}  // namespace cofinite
