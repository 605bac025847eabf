#include "doctest.h"

#include "cofinite/codec.hpp"
#include "cofinite/green.hpp"
#include "cofinite/random.hpp"

using namespace cofinite;

namespace {

const PartialBijection kUp = decode("p");
const PartialBijection kDown = decode("q");
const PartialBijection kRestrict = decode("{|2=>+0}");  // q * p

}  // namespace

TEST_CASE("R compares domains") {
  CHECK(green::is_r(kDown, kDown));
  CHECK(green::is_r(kDown, kRestrict));
  CHECK_FALSE(green::is_r(kUp, kDown));
}

TEST_CASE("L compares ranges") {
  CHECK(green::is_l(kUp, kUp));
  CHECK(green::is_l(kUp, kRestrict));
  CHECK_FALSE(green::is_l(kDown, kUp));
}

TEST_CASE("H is the meet of R and L") {
  CHECK(green::is_h(kRestrict, kRestrict));
  const PartialBijection swapped = decode("{2->3,3->2|4=>+0}");
  CHECK(green::is_h(kRestrict, swapped));
  CHECK_FALSE(green::is_h(kUp, kDown));
}

TEST_CASE("relations match the idempotent characterizations") {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const PartialBijection a = random_element(rng, SampleProfile{});
    const PartialBijection b = random_element(rng, SampleProfile{});
    CHECK(green::is_r(a, b) == (a * a.invert() == b * b.invert()));
    CHECK(green::is_l(a, b) == (a.invert() * a == b.invert() * b));
    CHECK(green::is_h(a, b) == (green::is_r(a, b) && green::is_l(a, b)));
  }
}

TEST_CASE("d_witness joins any two elements") {
  CHECK(green::d_witness(kDown, kUp) == kRestrict);
  CHECK(green::d_witness(identity(), identity()) == identity());
  Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    const PartialBijection a = random_element(rng, SampleProfile{});
    const PartialBijection b = random_element(rng, SampleProfile{});
    const PartialBijection mu = green::d_witness(a, b);
    CHECK(green::is_r(a, mu));
    CHECK(green::is_l(mu, b));
    CHECK(mu.is_monotone());
  }
}

TEST_CASE("natural order is domain containment") {
  const PartialBijection e = decode("{|2=>+0}");
  const PartialBijection f = decode("{|3=>+0}");
  CHECK(green::nat_leq(e, identity()));
  CHECK(green::nat_leq(e, e));
  CHECK_FALSE(green::nat_leq(e, f));
  CHECK(green::nat_leq(f, e));
  CHECK_THROWS_AS(green::nat_leq(kUp, e), NotIdempotent);
}

TEST_CASE("meet is composition of idempotents") {
  const PartialBijection off1 = decode("{|2=>+0}");
  const PartialBijection off2 = decode("{1->1|3=>+0}");
  const PartialBijection off12 = decode("{|3=>+0}");
  CHECK(green::meet(identity(), off1) == off1);
  CHECK(green::meet(off1, off2) == off12);
  CHECK(green::meet(off1, off1) == off1);
  CHECK_THROWS_AS(green::meet(kUp, off1), NotIdempotent);
}

TEST_CASE("idempotents correspond to finite sets") {
  CHECK(green::to_finite_set(identity()).empty());
  CHECK(green::to_finite_set(decode("{1->1,3->3|5=>+0}")) == FiniteSet({2, 4}));
  CHECK(green::from_finite_set(FiniteSet({1})) == decode("{|2=>+0}"));
  Rng rng(13);
  for (int i = 0; i < 300; ++i) {
    const PartialBijection e = random_idempotent(rng, SampleProfile{});
    const PartialBijection f = random_idempotent(rng, SampleProfile{});
    CHECK(green::from_finite_set(green::to_finite_set(e)) == e);
    CHECK(green::to_finite_set(green::meet(e, f)) ==
          green::to_finite_set(e).united(green::to_finite_set(f)));
    CHECK(green::nat_leq(e, f) ==
          green::to_finite_set(f).subset_of(green::to_finite_set(e)));
  }
}

TEST_CASE("connecting element realizes both idempotents") {
  // identity off {1} matched onto identity off {2}
  CHECK(green::connecting_element(decode("{|2=>+0}"), decode("{1->1|3=>+0}")) ==
        decode("{2->1|3=>+0}"));
  const PartialBijection e = decode("{|2=>+0}");
  CHECK(green::connecting_element(e, e) == e);
  CHECK(green::connecting_element(identity(), decode("{|3=>+0}")) ==
        decode("{|1=>+2}"));
  Rng rng(14);
  for (int i = 0; i < 300; ++i) {
    const PartialBijection a = random_idempotent(rng, SampleProfile{});
    const PartialBijection b = random_idempotent(rng, SampleProfile{});
    const PartialBijection con = green::connecting_element(a, b);
    CHECK(con * con.invert() == a);
    CHECK(con.invert() * con == b);
  }
}

TEST_CASE("simplicity witness composes exactly") {
  const auto w = green::simplicity_witness(identity(), kDown);
  CHECK(w.left == kDown);
  CHECK(w.right == identity());
  CHECK(w.left * identity() * w.right == kDown);

  const auto w2 = green::simplicity_witness(kDown, kUp);
  CHECK(w2.left == kUp);
  CHECK(w2.right == kUp);
  CHECK(w2.left * kDown * w2.right == kUp);

  const PartialBijection a = decode("{1->2,2->3,3->1|4=>+0}");
  const auto w3 = green::simplicity_witness(a, a);
  CHECK(w3.left == partial_identity(a.dom()));
  CHECK(w3.right == partial_identity(a.ran()));

  Rng rng(15);
  for (int i = 0; i < 300; ++i) {
    const PartialBijection x = random_element(rng, SampleProfile{});
    const PartialBijection y = random_element(rng, SampleProfile{});
    const auto w4 = green::simplicity_witness(x, y);
    CHECK(w4.left * x * w4.right == y);
  }
}

TEST_CASE("descending chains remove the least point") {
  const auto chain = green::omega_chain(identity(), 3);
  REQUIRE(chain.size() == 3);
  CHECK(chain[0] == identity());
  CHECK(chain[1] == decode("{|2=>+0}"));
  CHECK(chain[2] == decode("{|3=>+0}"));
  CHECK(green::omega_chain(decode("{|2=>+0}"), 1) ==
        std::vector<PartialBijection>{decode("{|2=>+0}")});
  for (std::size_t k = 0; k < chain.size(); ++k)
    CHECK(green::to_finite_set(chain[k]).size() == static_cast<Nat>(k));
  CHECK_THROWS_AS(green::omega_chain(kUp, 2), NotIdempotent);
  CHECK_THROWS_AS(green::omega_chain(identity(), 0), NonPositiveValue);
}

TEST_CASE("permutation parity and composition") {
  const auto cycle = green::unit_to_perm(decode("{1->2,2->3,3->1|4=>+0}"));
  CHECK(cycle.parity() == green::Parity::even);
  CHECK(green::FinPermutation::transposition(1, 2).parity() ==
        green::Parity::odd);
  CHECK(green::FinPermutation().parity() == green::Parity::even);

  Rng rng(16);
  for (int i = 0; i < 300; ++i) {
    const auto p = green::random_permutation(rng, 9, 6);
    const auto q = green::random_permutation(rng, 9, 6);
    CHECK((p * q).parity() == ((p.parity() == q.parity())
                                   ? green::Parity::even
                                   : green::Parity::odd));
    CHECK(green::unit_to_perm(green::perm_to_unit(p)) == p);
    CHECK((p * p.invert()).is_identity());
  }
}

TEST_CASE("units are exactly the finitely supported permutations") {
  CHECK_THROWS_AS(green::unit_to_perm(kUp), NotAUnit);
  CHECK_THROWS_AS(green::unit_to_perm(decode("{|2=>+0}")), NotAUnit);
  CHECK(green::perm_to_unit(green::FinPermutation()) == identity());
}

TEST_CASE("maximal subgroups re-index along the domain enumeration") {
  const PartialBijection e = decode("{|2=>+0}");
  const PartialBijection swap23 = decode("{2->3,3->2|4=>+0}");
  CHECK(green::h_class_iso(e, swap23) ==
        green::FinPermutation::transposition(1, 2));
  CHECK(green::h_class_iso(e, e) == green::FinPermutation());
  CHECK_THROWS_AS(green::h_class_iso(e, kDown), NotInHClass);

  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const PartialBijection f = random_idempotent(rng, SampleProfile{});
    const auto p = green::random_permutation(rng, 8, 5);
    const PartialBijection member = green::h_class_member(f, p);
    CHECK(member * member.invert() == f);
    CHECK(member.invert() * member == f);
    CHECK(green::h_class_iso(f, member) == p);
  }
}
