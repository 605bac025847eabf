#pragma once

#include <cstdint>
#include <vector>

#include "cofinite/green.hpp"
#include "cofinite/partial_bijection.hpp"

namespace cofinite::solver {

// Complete, finite solution set of one translation equation. Solutions are
// duplicate-free and sorted by their encoded text. free_slots_a/free_slots_b
// are the (a, b) of the counting formula: for a right equation the sizes of
// the range complements of the two operands, for a left equation the sizes
// of the domain complements.
struct SolutionSet {
  std::vector<PartialBijection> solutions;
  Nat free_slots_a = 0;
  Nat free_slots_b = 0;

  bool contains(const PartialBijection& x) const;
};

// All x with a * x == b. Empty unless dom b is contained in dom a; otherwise
// the forced core maps (t)a to (t)b for t in dom b, and each solution extends
// it by an injection of some subset of the range complement of a into the
// range complement of b. Every candidate is re-verified by composition.
SolutionSet solve_right(const PartialBijection& a, const PartialBijection& b);

// All x with x * a == b, via the inverse duality with solve_right.
SolutionSet solve_left(const PartialBijection& a, const PartialBijection& b);

// Closed form for |solve_right(a, b)|: 0 when dom b is not contained in
// dom a, otherwise sum over s of C(a_slots, s) * b_slots! / (b_slots - s)!.
std::uint64_t count_right(const PartialBijection& a, const PartialBijection& b);

// Both translation equations for the pair; the solution sets are always
// finite, which is the point.
struct FPropertyReport {
  SolutionSet right;  // {x : a * x == b}
  SolutionSet left;   // {x : x * a == b}
};
FPropertyReport check_f_property(const PartialBijection& a,
                                 const PartialBijection& b);

// Two-sided divisibility witness (c, d) with c * a * d == b, re-verified by
// composition before returning.
green::SimplicityWitness check_s_property(const PartialBijection& a,
                                          const PartialBijection& b);

}  // namespace cofinite::solver
