#include "cofinite/selftest.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "cofinite/bicyclic.hpp"
#include "cofinite/codec.hpp"
#include "cofinite/expr.hpp"
#include "cofinite/green.hpp"
#include "cofinite/partial_bijection.hpp"
#include "cofinite/random.hpp"
#include "cofinite/solver.hpp"
#include "cofinite/topology.hpp"

namespace cofinite::selftest {

namespace {

constexpr std::size_t kMaxMessages = 4;

struct Checker {
  SuiteResult result;

  explicit Checker(std::string name) { result.name = std::move(name); }

  void check(bool ok, const char* what) {
    ++result.checks;
    if (ok) return;
    ++result.failures;
    if (result.messages.size() < kMaxMessages) result.messages.push_back(what);
  }
};

bool pointwise_equal(const PartialBijection& a, const PartialBijection& b) {
  const Nat window = std::max(a.tail_start(), b.tail_start()) +
                     std::abs(a.shift()) + std::abs(b.shift()) + 1;
  for (Nat n = 1; n <= window; ++n)
    if (a.apply(n) != b.apply(n)) return false;
  return true;
}

SuiteResult semigroup_laws(std::uint64_t seed, std::uint64_t iters) {
  Checker t("semigroup-laws");
  Rng rng(seed, 1);
  const SampleProfile profile{};
  for (std::uint64_t i = 0; i < iters; ++i) {
    const PartialBijection a = random_element(rng, profile);
    const PartialBijection b = random_element(rng, profile);
    const PartialBijection c = random_element(rng, profile);

    t.check((a * b) * c == a * (b * c), "associativity");
    t.check(a * a.invert() * a == a, "x x^-1 x == x");
    t.check(a.invert() * a * a.invert() == a.invert(), "x^-1 x x^-1 == x^-1");
    t.check((a * b).invert() == b.invert() * a.invert(),
            "inversion reverses products");
    t.check(a.invert().invert() == a, "double inversion");

    const PartialBijection e = a * a.invert();
    const PartialBijection f = b * b.invert();
    t.check(e.is_idempotent() && f.is_idempotent(),
            "x x^-1 is an idempotent");
    t.check(e * f == f * e, "idempotents commute");

    t.check((a * b).shift() == a.shift() + b.shift(),
            "eventual shift is additive");

    const bool two_sided_identity =
        a * a.invert() == identity() && a.invert() * a == identity();
    t.check(a.is_unit() == two_sided_identity, "units are the invertibles");
    t.check(!a.is_unit() || a.shift() == 0, "units have shift zero");

    const PartialBijection ab = a * b;
    bool agrees = true;
    for (Nat n = 1; n <= 40; ++n) {
      const auto mid = a.apply(n);
      const auto direct = ab.apply(n);
      const auto chained = mid ? b.apply(*mid) : std::nullopt;
      if (direct != chained) agrees = false;
    }
    t.check(agrees, "composition agrees with pointwise evaluation");

    t.check(pointwise_equal(a, b) == (a == b),
            "canonical form is a normal form");

    const auto [threshold, offset] = a.eventual_shift();
    bool tail_ok = true;
    for (Nat n = threshold; n < threshold + 10; ++n)
      if (a.apply(n) != std::optional<Nat>(n + offset)) tail_ok = false;
    if (threshold > 1) {
      const auto before = a.apply(threshold - 1);
      if (before && *before == threshold - 1 + offset) tail_ok = false;
    }
    t.check(tail_ok, "tail threshold is minimal");
  }

  const PartialBijection unit = identity();
  t.check(bicyclic::up_shift() * bicyclic::down_shift() == unit, "p q == 1");
  t.check(!(bicyclic::down_shift() * bicyclic::up_shift() == unit),
          "q p != 1");
  return t.result;
}

SuiteResult idempotent_semilattice(std::uint64_t seed, std::uint64_t iters) {
  Checker t("idempotent-semilattice");
  Rng rng(seed, 2);
  const SampleProfile profile{};
  for (std::uint64_t i = 0; i < iters; ++i) {
    const PartialBijection x = random_element(rng, profile);
    t.check(x.is_idempotent() == (x * x == x),
            "idempotent predicate matches x x == x");

    const PartialBijection e = random_idempotent(rng, profile);
    const PartialBijection f = random_idempotent(rng, profile);
    t.check(green::nat_leq(e, f) == (green::meet(e, f) == e),
            "natural order matches e f == e");
    t.check(green::meet(e, f) == green::meet(f, e), "meet commutes");
    t.check(green::meet(e, e) == e, "meet is idempotent");

    t.check(green::from_finite_set(green::to_finite_set(e)) == e,
            "finite-set map inverts");
    t.check(green::to_finite_set(green::meet(e, f)) ==
                green::to_finite_set(e).united(green::to_finite_set(f)),
            "meet maps to union of complements");
    t.check(green::nat_leq(e, f) ==
                green::to_finite_set(f).subset_of(green::to_finite_set(e)),
            "order reverses inclusion of complements");

    const auto chain = green::omega_chain(e, 5);
    bool descending = true;
    for (std::size_t k = 1; k < chain.size(); ++k) {
      if (!green::nat_leq(chain[k], chain[k - 1]) ||
          chain[k] == chain[k - 1])
        descending = false;
      if (green::to_finite_set(chain[k]).size() !=
          green::to_finite_set(e).size() + static_cast<Nat>(k))
        descending = false;
    }
    t.check(descending, "descending chain drops one point per step");
  }
  return t.result;
}

SuiteResult green_relations(std::uint64_t seed, std::uint64_t iters) {
  Checker t("green-relations");
  Rng rng(seed, 3);
  const SampleProfile profile{};
  for (std::uint64_t i = 0; i < iters; ++i) {
    const PartialBijection a = random_element(rng, profile);
    const PartialBijection b = random_element(rng, profile);

    t.check(green::is_r(a, b) == (a * a.invert() == b * b.invert()),
            "R matches x x^-1 comparison");
    t.check(green::is_l(a, b) == (a.invert() * a == b.invert() * b),
            "L matches x^-1 x comparison");
    t.check(green::is_h(a, b) == (green::is_r(a, b) && green::is_l(a, b)),
            "H is R and L");
    t.check(green::is_r(a, a) && green::is_l(a, a), "relations are reflexive");
    t.check(green::is_r(a, b) == green::is_r(b, a) &&
                green::is_l(a, b) == green::is_l(b, a),
            "relations are symmetric");
    const PartialBijection c2 = random_element(rng, profile);
    t.check(!(green::is_r(a, b) && green::is_r(b, c2)) || green::is_r(a, c2),
            "R is transitive");
    t.check(!(green::is_l(a, b) && green::is_l(b, c2)) || green::is_l(a, c2),
            "L is transitive");

    const PartialBijection mu = green::d_witness(a, b);
    t.check(green::is_r(a, mu) && green::is_l(mu, b) && mu.is_monotone(),
            "D witness links the two classes");

    const PartialBijection e = random_idempotent(rng, profile);
    const PartialBijection f = random_idempotent(rng, profile);
    const PartialBijection con = green::connecting_element(e, f);
    t.check(con * con.invert() == e && con.invert() * con == f,
            "connecting element joins the idempotents");
    t.check(con.is_monotone(), "connecting element is monotone");

    const auto w = green::simplicity_witness(a, b);
    t.check(w.left * a * w.right == b, "simplicity witness composes");
    t.check(w.left.is_monotone(), "left witness is monotone");
  }
  return t.result;
}

SuiteResult units_and_parity(std::uint64_t seed, std::uint64_t iters) {
  Checker t("units-and-parity");
  Rng rng(seed, 4);
  for (std::uint64_t i = 0; i < iters; ++i) {
    const green::FinPermutation p = green::random_permutation(rng, 9, 6);
    const green::FinPermutation q = green::random_permutation(rng, 9, 6);

    t.check(green::unit_to_perm(green::perm_to_unit(p)) == p,
            "unit round trip");
    t.check(green::perm_to_unit(p).is_unit(), "permutations give units");
    t.check((p * q).parity() ==
                ((p.parity() == q.parity()) ? green::Parity::even
                                            : green::Parity::odd),
            "parity is a homomorphism");
    t.check((p * p.invert()).is_identity(), "permutation inverse");

    const PartialBijection e = random_idempotent(rng, SampleProfile{});
    const PartialBijection member = green::h_class_member(e, p);
    t.check(member * member.invert() == e && member.invert() * member == e,
            "subgroup member sits at its idempotent");
    t.check(green::h_class_iso(e, member) == p,
            "subgroup isomorphism round trip");
  }

  const PartialBijection three_cycle = decode("{1->2,2->3,3->1|4=>+0}");
  t.check(green::unit_to_perm(three_cycle).parity() == green::Parity::even,
          "3-cycle is even");
  t.check(green::FinPermutation::transposition(1, 2).parity() ==
              green::Parity::odd,
          "transposition is odd");
  return t.result;
}

SuiteResult equation_solver(std::uint64_t seed, std::uint64_t iters) {
  Checker t("equation-solver");
  Rng rng(seed, 5);
  const SampleProfile profile{2, 4, -2, 2};
  for (std::uint64_t i = 0; i < iters; ++i) {
    const PartialBijection a = random_element(rng, profile);
    const PartialBijection x = random_element(rng, profile);
    const PartialBijection b = a * x;

    const auto right = solver::solve_right(a, b);
    t.check(right.contains(x), "known solution is found");
    bool sound = true;
    for (const PartialBijection& s : right.solutions)
      if (!(a * s == b)) sound = false;
    t.check(sound, "right solutions satisfy the equation");
    t.check(solver::count_right(a, b) == right.solutions.size(),
            "closed-form count matches enumeration");

    const auto left = solver::solve_left(a, x * a);
    bool left_sound = left.contains(x);
    for (const PartialBijection& s : left.solutions)
      if (!(s * a == x * a)) left_sound = false;
    t.check(left_sound, "left solutions satisfy the equation");
    t.check(left.contains((x * a) * a.invert()),
            "b a^-1 solves the left equation for b = x a");

    const PartialBijection c = random_element(rng, profile);
    const auto w = solver::check_s_property(a, c);
    t.check(w.left * a * w.right == c, "two-sided divisibility witness");

    const auto report = solver::check_f_property(a, b);
    t.check(report.right.solutions.size() == right.solutions.size(),
            "report repeats the right count");
  }

  t.check(solver::count_right(identity(), identity()) == 1,
          "identity pair has one solution");
  const PartialBijection qp = decode("{|2=>+0}");
  t.check(solver::solve_right(qp, qp).solutions.size() == 2,
          "co-rank one idempotent pair has two solutions");
  return t.result;
}

SuiteResult bicyclic_embedding(std::uint64_t seed, std::uint64_t iters) {
  Checker t("bicyclic-embedding");
  Rng rng(seed, 6);

  bool hom = true;
  bool recognized = true;
  for (Nat a = 0; a <= 10; ++a)
    for (Nat b = 0; b <= 10; ++b) {
      const bicyclic::BicyclicWord u{a, b};
      if (!(bicyclic::recognize(bicyclic::embed(u)) ==
            std::optional<bicyclic::BicyclicWord>(u)))
        recognized = false;
      for (Nat c = 0; c <= 10 && hom; ++c)
        for (Nat d = 0; d <= 10; ++d) {
          const bicyclic::BicyclicWord v{c, d};
          if (!(bicyclic::embed(bicyclic::word_mul(u, v)) ==
                bicyclic::embed(u) * bicyclic::embed(v))) {
            hom = false;
            break;
          }
        }
    }
  t.check(hom, "embedding is a homomorphism (exponents <= 10)");
  t.check(recognized, "recognize inverts embed");
  t.check(bicyclic::word_mul({0, 1}, {1, 0}) == bicyclic::BicyclicWord{0, 0},
          "p q == 1 in normal form");
  t.check(bicyclic::word_mul({1, 0}, {0, 1}) == bicyclic::BicyclicWord{1, 1},
          "q p is not the identity");

  const SampleProfile profile{};
  for (std::uint64_t i = 0; i < iters; ++i) {
    const PartialBijection g = random_element(rng, profile);
    const PartialBijection e = bicyclic::projection_idempotent(g);
    t.check(e.is_idempotent() && bicyclic::recognize(e).has_value(),
            "projection is a bicyclic idempotent");
    t.check(bicyclic::recognize(g * e).has_value() &&
                bicyclic::recognize(e * g).has_value(),
            "both products with the projection are bicyclic");

    const PartialBijection idem = random_idempotent(rng, profile);
    const PartialBijection e0 =
        idem * bicyclic::projection_idempotent(idem);
    t.check(idem * e0 == e0 && e0 * idem == e0,
            "projection absorbs the idempotent");
    t.check(bicyclic::recognize(e0).has_value(),
            "absorbed idempotent is bicyclic");
  }
  return t.result;
}

SuiteResult neighborhood_calculus(std::uint64_t seed, std::uint64_t iters) {
  Checker t("neighborhood-calculus");
  Rng rng(seed, 7);
  const SampleProfile profile{2, 5, -2, 2};

  auto pick_fixed = [&](const PartialBijection& center) {
    const CofiniteSet domain = center.dom();
    const Nat count = rng.range(0, 2);
    std::vector<Nat> points;
    for (Nat i = 0; i < count; ++i)
      points.push_back(domain.kth(rng.range(1, 8)));
    return FiniteSet(std::move(points));
  };

  for (std::uint64_t i = 0; i < iters; ++i) {
    const auto kind = rng.range(0, 1) == 0 ? topo::NbhdKind::F
                                           : topo::NbhdKind::WF;
    const PartialBijection a = random_element(rng, profile);
    const PartialBijection b = random_element(rng, profile);

    const topo::BasicNbhd u(kind, a, pick_fixed(a));
    t.check(topo::contains(u, a), "center belongs to its neighborhood");

    const FiniteSet larger = u.fixed().united(pick_fixed(a));
    const topo::BasicNbhd finer(kind, a, larger);
    const PartialBijection sampled = topo::random_member(finer, rng);
    t.check(topo::contains(finer, sampled), "sampler stays inside");
    t.check(topo::contains(u, sampled), "larger fixed set refines");

    if (kind == topo::NbhdKind::F)
      t.check(green::is_h(a, topo::random_member(u, rng)),
              "exact-frame members share the H-class");

    const PartialBijection product = a * b;
    const FiniteSet fixed(
        {product.dom().kth(rng.range(1, 6)), product.dom().kth(1)});
    const auto refined = topo::product_refinement(kind, a, b, fixed);
    const topo::BasicNbhd ua(kind, a, refined.left_fixed);
    const topo::BasicNbhd ub(kind, b, refined.right_fixed);
    const topo::BasicNbhd target(kind, product, fixed);
    bool contained = true;
    for (int s = 0; s < 8; ++s) {
      const PartialBijection left = topo::random_member(ua, rng);
      const PartialBijection right = topo::random_member(ub, rng);
      if (!topo::contains(target, left * right)) contained = false;
    }
    t.check(contained, "refined product neighborhoods multiply inside");

    if (kind == topo::NbhdKind::F) {
      const topo::BasicNbhd inv = topo::inversion_image(u);
      bool inverted = true;
      for (int s = 0; s < 4; ++s)
        if (!topo::contains(inv, topo::random_member(u, rng).invert()))
          inverted = false;
      t.check(inverted, "inverses land in the inversion image");
    }

    if (!(a == b)) {
      const auto sep = topo::separation_witness(a, b, kind);
      const topo::BasicNbhd left(kind, a, sep.left_fixed);
      const topo::BasicNbhd right(kind, b, sep.right_fixed);
      t.check(topo::intersect_empty(left, right),
              "separating neighborhoods are disjoint");
      bool never_equal = true;
      for (int s = 0; s < 4; ++s)
        if (topo::random_member(left, rng) == topo::random_member(right, rng))
          never_equal = false;
      t.check(never_equal, "samples from separated sides differ");
    }

    std::set<std::string> distinct;
    for (int s = 0; s < 24 && distinct.size() < 3; ++s)
      distinct.insert(encode(topo::random_member(u, rng)));
    t.check(distinct.size() >= 3, "basic neighborhoods are infinite");
  }
  return t.result;
}

SuiteResult codec_roundtrip(std::uint64_t seed, std::uint64_t iters) {
  Checker t("codec-roundtrip");
  Rng rng(seed, 8);
  const SampleProfile profile{};
  for (std::uint64_t i = 0; i < iters; ++i) {
    const PartialBijection a = random_element(rng, profile);
    t.check(decode(encode(a)) == a, "decode inverts encode");
    t.check(eval_expr(encode(a)) == a, "expressions accept element literals");
    t.check(element_from_json(element_to_json(a)) == a, "JSON round trip");
    const PartialBijection b = random_element(rng, profile);
    t.check(eval_expr(encode(a) + " * " + encode(b)) == a * b,
            "composition evaluates");
    t.check(eval_expr(encode(a) + " ^-1") == a.invert(),
            "inversion evaluates");
  }
  t.check(eval_expr("p * q") == identity(), "p q evaluates to the identity");
  t.check(eval_expr("I ^-1") == identity(), "identity inverts to itself");
  bool caught = false;
  try {
    decode("{1->|2=>+0}");
  } catch (const ParseError&) {
    caught = true;
  }
  t.check(caught, "malformed text raises a parse error");
  return t.result;
}

}  // namespace

bool Report::passed() const { return total_failures() == 0; }

std::uint64_t Report::total_checks() const {
  std::uint64_t total = 0;
  for (const SuiteResult& s : suites) total += s.checks;
  return total;
}

std::uint64_t Report::total_failures() const {
  std::uint64_t total = 0;
  for (const SuiteResult& s : suites) total += s.failures;
  return total;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "selftest seed=" << seed << " iterations=" << iterations << "\n";
  for (const SuiteResult& s : suites) {
    out << "  " << s.name;
    for (std::size_t pad = s.name.size(); pad < 26; ++pad) out << ' ';
    out << (s.failures == 0 ? "PASS" : "FAIL") << "  checks=" << s.checks;
    if (s.failures != 0) out << " failures=" << s.failures;
    out << "\n";
    for (const std::string& message : s.messages)
      out << "    ! " << message << "\n";
  }
  out << "result: " << (passed() ? "PASS" : "FAIL") << " (" << suites.size()
      << " suites, " << total_checks() << " checks, " << total_failures()
      << " failures)\n";
  return out.str();
}

nlohmann::json Report::to_json() const {
  nlohmann::json out;
  out["seed"] = seed;
  out["iterations"] = iterations;
  out["passed"] = passed();
  out["suites"] = nlohmann::json::array();
  for (const SuiteResult& s : suites)
    out["suites"].push_back({{"name", s.name},
                             {"checks", s.checks},
                             {"failures", s.failures},
                             {"messages", s.messages}});
  return out;
}

Report run(std::uint64_t seed, std::uint64_t iterations) {
  Report report;
  report.seed = seed;
  report.iterations = iterations;
  report.suites.push_back(semigroup_laws(seed, iterations));
  report.suites.push_back(idempotent_semilattice(seed, iterations));
  report.suites.push_back(green_relations(seed, iterations));
  report.suites.push_back(units_and_parity(seed, iterations));
  report.suites.push_back(equation_solver(seed, iterations));
  report.suites.push_back(bicyclic_embedding(seed, iterations / 4 + 1));
  report.suites.push_back(neighborhood_calculus(seed, iterations / 4 + 1));
  report.suites.push_back(codec_roundtrip(seed, iterations));
  return report;
}

}  // namespace cofinite::selftest
