#include "cofinite/cli.hpp"

#include <functional>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cofinite/bicyclic.hpp"
#include "cofinite/codec.hpp"
#include "cofinite/expr.hpp"
#include "cofinite/green.hpp"
#include "cofinite/selftest.hpp"
#include "cofinite/solver.hpp"
#include "cofinite/topology.hpp"

namespace cofinite {

namespace {

using nlohmann::json;

FiniteSet parse_point_list(const std::string& text) {
  std::vector<Nat> points;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw ParseError(0, "bad point list entry '" + item + "'");
    }
    if (used != item.size())
      throw ParseError(used, "bad point list entry '" + item + "'");
    points.push_back(value);
  }
  return FiniteSet(std::move(points));
}

topo::NbhdKind parse_kind(const std::string& text) {
  if (text == "F") return topo::NbhdKind::F;
  if (text == "WF") return topo::NbhdKind::WF;
  throw ParseError(0, "kind must be F or WF");
}

std::string set_text(const FiniteSet& points) {
  std::string out = "{";
  bool first = true;
  for (Nat x : points) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(x);
  }
  return out + "}";
}

json set_json(const FiniteSet& points) {
  return json(points.values());
}

struct Context {
  bool json_output = false;
  std::ostream& out;
  std::ostream& err;

  void element(const PartialBijection& a) {
    if (json_output)
      out << element_to_json(a).dump() << "\n";
    else
      out << encode(a) << "\n";
  }

  void boolean(bool value) {
    if (json_output)
      out << json{{"result", value}}.dump() << "\n";
    else
      out << (value ? "true" : "false") << "\n";
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact arithmetic in the inverse monoid of co-finite, almost "
               "monotone, injective partial selfmaps of the positive "
               "integers."};
  app.require_subcommand(1);
  Context ctx{false, out, err};
  app.add_flag("--json", ctx.json_output, "emit JSON instead of plain text");
  int exit_code = 0;

  // eval
  auto* eval_cmd = app.add_subcommand(
      "eval", "Evaluate an expression over elements (literals, I, p, q, "
              "`*`, postfix `^-1`, parentheses)");
  auto eval_text = std::make_shared<std::string>();
  eval_cmd->add_option("expr", *eval_text, "expression")->required();
  eval_cmd->callback([&ctx, eval_text] { ctx.element(eval_expr(*eval_text)); });

  // green
  auto* green_cmd =
      app.add_subcommand("green", "Green's relations and their witnesses");
  auto green_rel = std::make_shared<std::string>();
  auto green_a = std::make_shared<std::string>();
  auto green_b = std::make_shared<std::string>();
  green_cmd->add_option("relation", *green_rel, "one of R, L, H, D, leq, meet, witness")
      ->required()
      ->check(CLI::IsMember({"R", "L", "H", "D", "leq", "meet", "witness"}));
  green_cmd->add_option("a", *green_a, "first element")->required();
  green_cmd->add_option("b", *green_b, "second element")->required();
  green_cmd->callback([&ctx, green_rel, green_a, green_b] {
    const PartialBijection a = decode(*green_a);
    const PartialBijection b = decode(*green_b);
    const std::string& rel = *green_rel;
    if (rel == "R") return ctx.boolean(green::is_r(a, b));
    if (rel == "L") return ctx.boolean(green::is_l(a, b));
    if (rel == "H") return ctx.boolean(green::is_h(a, b));
    if (rel == "D") return ctx.element(green::d_witness(a, b));
    if (rel == "leq") return ctx.boolean(green::nat_leq(a, b));
    if (rel == "meet") return ctx.element(green::meet(a, b));
    const auto w = green::simplicity_witness(a, b);
    if (ctx.json_output) {
      ctx.out << json{{"left", element_to_json(w.left)},
                      {"right", element_to_json(w.right)}}
                     .dump()
              << "\n";
    } else {
      ctx.out << encode(w.left) << "\n" << encode(w.right) << "\n";
    }
  });

  // solve
  auto* solve_cmd =
      app.add_subcommand("solve", "Enumerate the solutions of a * x = b "
                                  "(right) or x * a = b (left)");
  auto solve_side = std::make_shared<std::string>();
  auto solve_a = std::make_shared<std::string>();
  auto solve_b = std::make_shared<std::string>();
  solve_cmd->add_option("side", *solve_side, "right or left")
      ->required()
      ->check(CLI::IsMember({"right", "left"}));
  solve_cmd->add_option("a", *solve_a, "known factor")->required();
  solve_cmd->add_option("b", *solve_b, "product")->required();
  solve_cmd->callback([&ctx, solve_side, solve_a, solve_b] {
    const PartialBijection a = decode(*solve_a);
    const PartialBijection b = decode(*solve_b);
    const auto set = *solve_side == "right" ? solver::solve_right(a, b)
                                            : solver::solve_left(a, b);
    if (ctx.json_output) {
      json list = json::array();
      for (const PartialBijection& x : set.solutions)
        list.push_back(element_to_json(x));
      ctx.out << list.dump() << "\n";
    } else {
      for (const PartialBijection& x : set.solutions)
        ctx.out << encode(x) << "\n";
    }
  });

  // bicyclic
  auto* bi_cmd = app.add_subcommand(
      "bicyclic", "Normal-form arithmetic for words q^a p^b and their "
                  "embedding as shift maps");
  auto* bi_mul = bi_cmd->add_subcommand("mul", "multiply two words");
  auto word = std::make_shared<std::vector<Nat>>(std::vector<Nat>(4, 0));
  bi_mul->add_option("a", (*word)[0], "q exponent of the first word")->required();
  bi_mul->add_option("b", (*word)[1], "p exponent of the first word")->required();
  bi_mul->add_option("c", (*word)[2], "q exponent of the second word")->required();
  bi_mul->add_option("d", (*word)[3], "p exponent of the second word")->required();
  bi_mul->callback([&ctx, word] {
    for (Nat v : *word)
      if (v < 0) throw NonPositiveValue("exponents must be nonnegative");
    const auto r = bicyclic::word_mul({(*word)[0], (*word)[1]},
                                      {(*word)[2], (*word)[3]});
    if (ctx.json_output)
      ctx.out << json{{"q", r.q_pow}, {"p", r.p_pow}}.dump() << "\n";
    else
      ctx.out << "q^" << r.q_pow << " p^" << r.p_pow << "\n";
  });
  auto* bi_embed = bi_cmd->add_subcommand("embed", "embed a word as a shift map");
  auto embed_word = std::make_shared<std::vector<Nat>>(std::vector<Nat>(2, 0));
  bi_embed->add_option("a", (*embed_word)[0], "q exponent")->required();
  bi_embed->add_option("b", (*embed_word)[1], "p exponent")->required();
  bi_embed->callback([&ctx, embed_word] {
    if ((*embed_word)[0] < 0 || (*embed_word)[1] < 0)
      throw NonPositiveValue("exponents must be nonnegative");
    ctx.element(bicyclic::embed({(*embed_word)[0], (*embed_word)[1]}));
  });
  auto* bi_rec = bi_cmd->add_subcommand(
      "recognize", "write an element as q^a p^b when possible");
  auto rec_text = std::make_shared<std::string>();
  bi_rec->add_option("element", *rec_text, "element")->required();
  bi_rec->callback([&ctx, rec_text] {
    const auto w = bicyclic::recognize(decode(*rec_text));
    if (ctx.json_output) {
      json j{{"bicyclic", w.has_value()}};
      if (w) {
        j["q"] = w->q_pow;
        j["p"] = w->p_pow;
      }
      ctx.out << j.dump() << "\n";
    } else if (w) {
      ctx.out << "q^" << w->q_pow << " p^" << w->p_pow << "\n";
    } else {
      ctx.out << "not-bicyclic\n";
    }
  });
  auto* bi_proj = bi_cmd->add_subcommand(
      "project", "idempotent whose products with the element are bicyclic");
  auto proj_text = std::make_shared<std::string>();
  bi_proj->add_option("element", *proj_text, "element")->required();
  bi_proj->callback([&ctx, proj_text] {
    ctx.element(bicyclic::projection_idempotent(decode(*proj_text)));
  });
  bi_cmd->require_subcommand(1);

  // sep
  auto* sep_cmd = app.add_subcommand(
      "sep", "Fixed sets giving disjoint basic neighborhoods around two "
             "distinct elements");
  auto sep_kind = std::make_shared<std::string>();
  auto sep_a = std::make_shared<std::string>();
  auto sep_b = std::make_shared<std::string>();
  sep_cmd->add_option("kind", *sep_kind, "F or WF")->required();
  sep_cmd->add_option("a", *sep_a, "first element")->required();
  sep_cmd->add_option("b", *sep_b, "second element")->required();
  sep_cmd->callback([&ctx, sep_kind, sep_a, sep_b] {
    const auto w = topo::separation_witness(decode(*sep_a), decode(*sep_b),
                                            parse_kind(*sep_kind));
    if (ctx.json_output)
      ctx.out << json{{"left_fixed", set_json(w.left_fixed)},
                      {"right_fixed", set_json(w.right_fixed)}}
                     .dump()
              << "\n";
    else
      ctx.out << set_text(w.left_fixed) << " " << set_text(w.right_fixed)
              << "\n";
  });

  // member
  auto* member_cmd = app.add_subcommand(
      "member", "Does a candidate lie in the basic neighborhood around a "
                "center?");
  auto member_kind = std::make_shared<std::string>();
  auto member_center = std::make_shared<std::string>();
  auto member_candidate = std::make_shared<std::string>();
  auto member_fix = std::make_shared<std::string>();
  member_cmd->add_option("kind", *member_kind, "F or WF")->required();
  member_cmd->add_option("center", *member_center, "center element")->required();
  member_cmd->add_option("candidate", *member_candidate, "candidate element")
      ->required();
  member_cmd->add_option("--fix", *member_fix,
                         "comma-separated fixed points (default none)");
  member_cmd->callback([&ctx, member_kind, member_center, member_candidate,
                        member_fix] {
    const topo::BasicNbhd u(parse_kind(*member_kind), decode(*member_center),
                            parse_point_list(*member_fix));
    ctx.boolean(topo::contains(u, decode(*member_candidate)));
  });

  // meet-empty
  auto* meet_cmd = app.add_subcommand(
      "meet-empty", "Do two basic neighborhoods of the same kind miss each "
                    "other?");
  auto meet_kind = std::make_shared<std::string>();
  auto meet_a = std::make_shared<std::string>();
  auto meet_b = std::make_shared<std::string>();
  auto meet_fix_a = std::make_shared<std::string>();
  auto meet_fix_b = std::make_shared<std::string>();
  meet_cmd->add_option("kind", *meet_kind, "F or WF")->required();
  meet_cmd->add_option("a", *meet_a, "first center")->required();
  meet_cmd->add_option("b", *meet_b, "second center")->required();
  meet_cmd->add_option("--fix-a", *meet_fix_a, "fixed points of the first");
  meet_cmd->add_option("--fix-b", *meet_fix_b, "fixed points of the second");
  meet_cmd->callback([&ctx, meet_kind, meet_a, meet_b, meet_fix_a, meet_fix_b] {
    const auto kind = parse_kind(*meet_kind);
    const topo::BasicNbhd u(kind, decode(*meet_a), parse_point_list(*meet_fix_a));
    const topo::BasicNbhd v(kind, decode(*meet_b), parse_point_list(*meet_fix_b));
    const auto witness = topo::intersection_witness(u, v);
    if (ctx.json_output) {
      json j{{"empty", !witness.has_value()}};
      if (witness) j["witness"] = element_to_json(*witness);
      ctx.out << j.dump() << "\n";
    } else if (witness) {
      ctx.out << "nonempty " << encode(*witness) << "\n";
    } else {
      ctx.out << "empty\n";
    }
  });

  // rand
  auto* rand_cmd = app.add_subcommand(
      "rand", "Sample canonical elements. Keys are drawn without replacement "
              "from {1..max-position}, values injectively below the tail "
              "image, and invalid draws are rejected, so a seed reproduces "
              "the same suite everywhere.");
  auto rand_seed = std::make_shared<std::uint64_t>(1);
  auto rand_count = std::make_shared<Nat>(1);
  auto rand_profile = std::make_shared<SampleProfile>();
  rand_cmd->add_option("--seed", *rand_seed, "generator seed");
  rand_cmd->add_option("--count", *rand_count, "how many elements");
  rand_cmd->add_option("--max-exceptions", rand_profile->max_exceptions,
                       "most exceptional pairs");
  rand_cmd->add_option("--max-position", rand_profile->max_position,
                       "exception keys and domain holes stay at or below this");
  rand_cmd->add_option("--shift-min", rand_profile->min_shift, "least shift");
  rand_cmd->add_option("--shift-max", rand_profile->max_shift, "greatest shift");
  rand_cmd->callback([&ctx, rand_seed, rand_count, rand_profile] {
    if (*rand_count < 1 || rand_profile->max_exceptions < 0 ||
        rand_profile->max_position < 0 ||
        rand_profile->min_shift > rand_profile->max_shift)
      throw NonPositiveValue("bad sampling profile");
    Rng rng(*rand_seed);
    json list = json::array();
    for (Nat i = 0; i < *rand_count; ++i) {
      const PartialBijection a = random_element(rng, *rand_profile);
      if (ctx.json_output)
        list.push_back(element_to_json(a));
      else
        ctx.out << encode(a) << "\n";
    }
    if (ctx.json_output) ctx.out << list.dump() << "\n";
  });

  // selftest
  auto* self_cmd = app.add_subcommand(
      "selftest", "Run the property suites; deterministic per seed");
  auto self_seed = std::make_shared<std::uint64_t>(1);
  auto self_iters = std::make_shared<std::uint64_t>(100);
  self_cmd->add_option("--seed", *self_seed, "suite seed");
  self_cmd->add_option("--iters", *self_iters, "random cases per suite");
  self_cmd->callback([&ctx, &exit_code, self_seed, self_iters] {
    if (*self_iters < 1)
      throw CLI::ValidationError("--iters", "must be at least 1");
    const auto report = selftest::run(*self_seed, *self_iters);
    if (ctx.json_output)
      ctx.out << report.to_json().dump() << "\n";
    else
      ctx.out << report.to_text();
    if (!report.passed()) exit_code = 2;
  });

  try {
    std::vector<const char*> argv;
    argv.push_back("cofinite");
    for (const std::string& arg : args) argv.push_back(arg.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& help) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& parse) {
    err << "usage error: " << parse.what() << "\n";
    return 1;
  } catch (const Error& domain) {
    err << "error: " << domain.what() << "\n";
    return 1;
  } catch (const std::exception& other) {
    err << "error: " << other.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace cofinite
