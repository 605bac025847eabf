#pragma once

#include <cstdint>
#include <optional>

#include "cofinite/partial_bijection.hpp"
#include "cofinite/random.hpp"

namespace cofinite::topo {

// The two neighborhood bases. Around a center c with finite fixed set
// F inside dom c, a basic set collects the elements agreeing with c on F
// and constrained as:
//   F    same domain and same range as c (exact frame);
//   WF   domain contained in dom c (weak frame).
enum class NbhdKind { F, WF };

class BasicNbhd {
 public:
  // Throws FixedSetOutsideDomain unless fixed is a subset of dom center.
  BasicNbhd(NbhdKind kind, PartialBijection center, FiniteSet fixed);

  NbhdKind kind() const { return kind_; }
  const PartialBijection& center() const { return center_; }
  const FiniteSet& fixed() const { return fixed_; }

 private:
  NbhdKind kind_;
  PartialBijection center_;
  FiniteSet fixed_;
};

bool contains(const BasicNbhd& u, const PartialBijection& candidate);

// Fixed sets making multiplication continuous at (a, b): every product of a
// member of U_a(left_fixed) and a member of U_b(right_fixed) lies in
// U_{ab}(fixed), for the requested kind. right_fixed starts from the image
// of `fixed` under a; both sides are then enlarged by the finitely many
// points where one factor can steer the product's frame off course
// (dom a minus dom ab on the left, and for the exact-frame kind dom b minus
// ran a on the right). Requires fixed inside dom(ab).
struct ProductRefinement {
  FiniteSet left_fixed;
  FiniteSet right_fixed;
};
ProductRefinement product_refinement(NbhdKind kind, const PartialBijection& a,
                                     const PartialBijection& b,
                                     const FiniteSet& fixed);

// For an exact-frame neighborhood U_c(F): the neighborhood U_{c^-1}((F)c),
// which contains the inverse of every member of U_c(F). Throws KindMismatch
// for the weak kind.
BasicNbhd inversion_image(const BasicNbhd& u);

// Decides whether two basic sets of the same kind meet; when they do,
// returns a member of both, built by order-matching the part not forced by
// the two fixed sets. Throws KindMismatch when the kinds differ.
std::optional<PartialBijection> intersection_witness(const BasicNbhd& u,
                                                     const BasicNbhd& v);
bool intersect_empty(const BasicNbhd& u, const BasicNbhd& v);

// For distinct a, b: fixed sets with U_a(left) and U_b(right) disjoint,
// always choosing the least qualifying points. Throws EqualElements.
struct SeparationWitness {
  FiniteSet left_fixed;
  FiniteSet right_fixed;
};
SeparationWitness separation_witness(const PartialBijection& a,
                                     const PartialBijection& b, NbhdKind kind);

// A member of u, deterministic per seed: the center with finitely many
// images re-matched off the fixed set, and for the weak kind possibly
// finitely many domain points deleted.
PartialBijection random_member(const BasicNbhd& u, Rng& rng);
PartialBijection random_member(const BasicNbhd& u, std::uint64_t seed);

}  // namespace cofinite::topo
