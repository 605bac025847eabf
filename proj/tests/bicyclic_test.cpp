#include "doctest.h"

#include "cofinite/bicyclic.hpp"
#include "cofinite/codec.hpp"
#include "cofinite/random.hpp"

using namespace cofinite;
using bicyclic::BicyclicWord;

TEST_CASE("word multiplication cancels p against q") {
  CHECK(bicyclic::word_mul({0, 1}, {1, 0}) == BicyclicWord{0, 0});
  CHECK(bicyclic::word_mul({1, 0}, {0, 1}) == BicyclicWord{1, 1});
  CHECK(bicyclic::word_mul({2, 3}, {0, 0}) == BicyclicWord{2, 3});
  CHECK(bicyclic::word_mul({0, 0}, {2, 3}) == BicyclicWord{2, 3});
  CHECK(bicyclic::word_mul({1, 2}, {3, 1}) == BicyclicWord{2, 1});
}

TEST_CASE("embedding sends words to pure shift maps") {
  CHECK(bicyclic::embed({0, 0}) == identity());
  CHECK(bicyclic::embed({1, 0}) == decode("{|2=>-1}"));
  CHECK(bicyclic::embed({0, 1}) == decode("{|1=>+1}"));
  CHECK(bicyclic::embed({2, 2}) == decode("{|3=>+0}"));
  CHECK(bicyclic::embed({2, 2}) ==
        decode("q") * decode("q") * decode("p") * decode("p"));
}

TEST_CASE("embedding is a homomorphism for small exponents") {
  for (Nat a = 0; a <= 6; ++a)
    for (Nat b = 0; b <= 6; ++b)
      for (Nat c = 0; c <= 6; ++c)
        for (Nat d = 0; d <= 6; ++d) {
          const BicyclicWord u{a, b};
          const BicyclicWord v{c, d};
          REQUIRE(bicyclic::embed(bicyclic::word_mul(u, v)) ==
                  bicyclic::embed(u) * bicyclic::embed(v));
        }
}

TEST_CASE("recognize inverts the embedding") {
  CHECK(bicyclic::recognize(identity()) == BicyclicWord{0, 0});
  CHECK(bicyclic::recognize(decode("p")) == BicyclicWord{0, 1});
  CHECK(bicyclic::recognize(decode("q")) == BicyclicWord{1, 0});
  CHECK_FALSE(bicyclic::recognize(decode("{3->1|4=>+0}")).has_value());
  for (Nat a = 0; a <= 8; ++a)
    for (Nat b = 0; b <= 8; ++b)
      CHECK(bicyclic::recognize(bicyclic::embed({a, b})) ==
            BicyclicWord{a, b});
}

TEST_CASE("projection idempotent fixtures") {
  CHECK(bicyclic::projection_idempotent(identity()) == identity());

  const PartialBijection e12 = decode("{3->1|4=>+0}");
  const PartialBijection proj = bicyclic::projection_idempotent(e12);
  CHECK(proj == decode("{|4=>+0}"));
  CHECK(e12 * proj == decode("{|4=>+0}"));
  CHECK(proj * e12 == decode("{|4=>+0}"));

  const PartialBijection down = decode("q");
  const PartialBijection proj_down = bicyclic::projection_idempotent(down);
  CHECK(proj_down == decode("{|2=>+0}"));
  // the projection absorbs on one side and truncates on the other
  CHECK(proj_down * down == down);
  CHECK(down * proj_down == decode("{|3=>-1}"));
  CHECK(bicyclic::recognize(down * proj_down).has_value());
}

TEST_CASE("projection keeps random products inside the bicyclic copy") {
  Rng rng(30);
  for (int i = 0; i < 2000; ++i) {
    const PartialBijection g = random_element(rng, SampleProfile{});
    const PartialBijection e = bicyclic::projection_idempotent(g);
    CHECK(e.is_idempotent());
    CHECK(bicyclic::recognize(e).has_value());
    CHECK(bicyclic::recognize(g * e).has_value());
    CHECK(bicyclic::recognize(e * g).has_value());
  }
}

TEST_CASE("exception-free sampling lands in the bicyclic copy") {
  Rng rng(32);
  const SampleProfile pure_shifts{0, 6, -3, 3};
  for (int i = 0; i < 300; ++i) {
    const PartialBijection g = random_element(rng, pure_shifts);
    const auto word = bicyclic::recognize(g);
    REQUIRE(word.has_value());
    CHECK(bicyclic::embed(*word) == g);
  }
}

TEST_CASE("projection absorbs idempotents") {
  Rng rng(31);
  for (int i = 0; i < 500; ++i) {
    const PartialBijection idem = random_idempotent(rng, SampleProfile{});
    const PartialBijection e0 = idem * bicyclic::projection_idempotent(idem);
    CHECK(idem * e0 == e0);
    CHECK(e0 * idem == e0);
    CHECK(bicyclic::recognize(e0).has_value());
  }
}
