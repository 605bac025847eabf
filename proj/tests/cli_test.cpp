#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cofinite/cli.hpp"

using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cofinite::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval composes and prints elements") {
  const auto run = cli({"eval", "p * q"});
  CHECK(run.code == 0);
  CHECK(run.out == "{|1=>+0}\n");

  const auto inv = cli({"eval", "q * p"});
  CHECK(inv.out == "{|2=>+0}\n");

  const auto jsonified = cli({"--json", "eval", "{3->1|4=>+0}"});
  CHECK(jsonified.code == 0);
  const json j = json::parse(jsonified.out);
  CHECK(j.at("tail") == 4);
  CHECK(j.at("shift") == 0);
  CHECK(j.at("exceptions")[0][0] == 3);
}

TEST_CASE("parse errors exit with code 1") {
  const auto run = cli({"eval", "p *"});
  CHECK(run.code == 1);
  CHECK(run.err.find("error") != std::string::npos);

  CHECK(cli({"eval", "{1->7|2=>+0}"}).code == 1);
  CHECK(cli({"green", "nope", "I", "I"}).code == 1);
  CHECK(cli({}).code == 1);
}

TEST_CASE("green subcommands answer relations and witnesses") {
  CHECK(cli({"green", "R", "q", "{|2=>+0}"}).out == "true\n");
  CHECK(cli({"green", "R", "p", "q"}).out == "false\n");
  CHECK(cli({"green", "L", "p", "{|2=>+0}"}).out == "true\n");
  CHECK(cli({"green", "H", "p", "q"}).out == "false\n");
  CHECK(cli({"green", "D", "q", "p"}).out == "{|2=>+0}\n");
  CHECK(cli({"green", "leq", "{|2=>+0}", "I"}).out == "true\n");
  CHECK(cli({"green", "meet", "{|2=>+0}", "{1->1|3=>+0}"}).out == "{|3=>+0}\n");
  CHECK(cli({"green", "leq", "p", "I"}).code == 1);

  const auto witness = cli({"green", "witness", "q", "p"});
  CHECK(witness.code == 0);
  CHECK(witness.out == "{|1=>+1}\n{|1=>+1}\n");
}

TEST_CASE("solve prints one element per line or a JSON array") {
  const auto run = cli({"solve", "right", "{|2=>+0}", "{|2=>+0}"});
  CHECK(run.code == 0);
  CHECK(run.out == "{|1=>+0}\n{|2=>+0}\n");

  const auto as_json = cli({"--json", "solve", "right", "{|2=>+0}", "{|2=>+0}"});
  const json j = json::parse(as_json.out);
  CHECK(j.is_array());
  CHECK(j.size() == 2);

  CHECK(cli({"solve", "left", "p", "I"}).out.empty());
  CHECK(cli({"solve", "left", "q", "I"}).out == "{|1=>+1}\n");
}

TEST_CASE("bicyclic subcommands") {
  CHECK(cli({"bicyclic", "mul", "0", "1", "1", "0"}).out == "q^0 p^0\n");
  CHECK(cli({"bicyclic", "mul", "1", "0", "0", "1"}).out == "q^1 p^1\n");
  CHECK(cli({"bicyclic", "embed", "1", "0"}).out == "{|2=>-1}\n");
  CHECK(cli({"bicyclic", "recognize", "p"}).out == "q^0 p^1\n");
  CHECK(cli({"bicyclic", "recognize", "{3->1|4=>+0}"}).out == "not-bicyclic\n");
  CHECK(cli({"bicyclic", "project", "{3->1|4=>+0}"}).out == "{|4=>+0}\n");

  const auto j = json::parse(cli({"--json", "bicyclic", "recognize", "q"}).out);
  CHECK(j.at("bicyclic") == true);
  CHECK(j.at("q") == 1);
  CHECK(j.at("p") == 0);
}

TEST_CASE("topology subcommands") {
  CHECK(cli({"sep", "WF", "I", "{|2=>+0}"}).out == "{1} {2}\n");
  CHECK(cli({"sep", "F", "p", "q"}).out == "{} {}\n");
  CHECK(cli({"sep", "F", "I", "I"}).code == 1);

  CHECK(cli({"member", "WF", "I", "{|2=>+0}", "--fix", "2"}).out == "true\n");
  CHECK(cli({"member", "F", "I", "{|2=>+0}", "--fix", "2"}).out == "false\n");
  CHECK(cli({"member", "WF", "{|2=>+0}", "I", "--fix", "3"}).out == "false\n");
  CHECK(cli({"member", "WF", "I", "I", "--fix", "bogus"}).code == 1);
  CHECK(cli({"member", "XF", "I", "I"}).code == 1);

  const auto empty = cli({"meet-empty", "WF", "I", "{|2=>+0}", "--fix-a", "1",
                          "--fix-b", "2"});
  CHECK(empty.out == "empty\n");
  const auto nonempty = cli({"meet-empty", "WF", "I", "{|2=>+0}", "--fix-a", "2",
                             "--fix-b", "3"});
  CHECK(nonempty.out.substr(0, 9) == "nonempty ");
}

TEST_CASE("rand is deterministic per seed") {
  const auto first = cli({"rand", "--seed", "9", "--count", "5"});
  const auto second = cli({"rand", "--seed", "9", "--count", "5"});
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(cli({"rand", "--seed", "10"}).out != first.out);
  CHECK(cli({"rand", "--count", "0"}).code == 1);
}

TEST_CASE("selftest runs the suites and reports determinism") {
  const auto first = cli({"selftest", "--seed", "3", "--iters", "5"});
  const auto second = cli({"selftest", "--seed", "3", "--iters", "5"});
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out.find("result: PASS") != std::string::npos);

  CHECK(cli({"selftest", "--iters", "0"}).code == 1);

  const auto j = json::parse(cli({"--json", "selftest", "--seed", "3",
                                  "--iters", "2"}).out);
  CHECK(j.at("passed") == true);
}

TEST_CASE("help exits cleanly") {
  const auto run = cli({"--help"});
  CHECK(run.code == 0);
  CHECK(run.out.find("eval") != std::string::npos);
}
