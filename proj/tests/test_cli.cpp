#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pathlambda/cli.hpp"
#include "pathlambda/classic_beta.hpp"
#include "pathlambda/distant.hpp"
#include "support/generators.hpp"

#include <sstream>

using namespace pathlambda;

namespace {
struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kIdIdFile = "A L 1\nS L 1\n";
}  // namespace

TEST_CASE("bind reports the binder of the worked example") {
  auto r = invoke({"bind", "--path", "A L L L A L S 1 L 3"});
  CHECK(r.code == 0);
  CHECK(r.out == "binder: L #2 (index 2)\n");

  auto la = invoke({"bind", "--path", "A L A 1 L 1", "--index", "3", "--mode", "la"});
  CHECK(la.out == "binder: L #1 (index 1)\nmatch: A (index 0)\n");
}

TEST_CASE("parse") {
  CHECK(invoke({"parse", "--syntax", "named", "\\v. v"}).out == "L 1\n");
  CHECK(invoke({"parse", "(\\ ((\\ \\ 2 2) (\\ 2)) 1) (\\ 1)"}).out ==
        "A L A A L L A 2\nA L A A L L S 2\nA L A S L 2\nA L S 1\nS L 1\n");
  CHECK(invoke({"parse"}, "# identity applied to itself\nS L 1\nA L 1\n").out == kIdIdFile);
}

TEST_CASE("step") {
  CHECK(invoke({"step", "--relation", "beta", "--at", ""}, kIdIdFile).out == "L 1\n");
  CHECK(invoke({"step", "--relation", "beta", "--at", "ε"}, kIdIdFile).out == "L 1\n");
  CHECK(invoke({"step", "--relation", "b", "--at", ""}, kIdIdFile).out == "A L L 1\nS L 1\n");
  CHECK(invoke({"step", "--relation", "f", "--at", "A L 1"}, kIdIdFile).out ==
        "A L L 1\nS L 1\n");
  CHECK(invoke({"step", "--relation", "ef", "--at", "A L 1"}, kIdIdFile).out ==
        "A L 1 L 1\nS L 1\n");
}

TEST_CASE("redexes") {
  const std::string k = "A A L L 2\nA S L 1\nS L 1\n";
  CHECK(invoke({"redexes", "--relation", "b"}, k).out ==
        "p=\"A\" b=\"\" active\np=\"\" b=\"A L\" inactive\n");
  CHECK(invoke({"redexes", "--relation", "beta"}, k).out == "p=\"A\"\n");
}

TEST_CASE("normalize") {
  CHECK(invoke({"normalize", "(\\ 1) (\\ 1)"}).out == "L 1\n");
  CHECK(invoke({"normalize", "--relation", "e", "(\\ \\ 1) (\\ 1)"}).out == "L 1\n");
  auto omega = invoke({"normalize", "--fuel", "20", "(\\ 1 1) (\\ 1 1)"});
  CHECK(omega.code == 2);
  CHECK(omega.err.find("FuelExhausted") != std::string::npos);
}

TEST_CASE("exit codes") {
  auto bad_input = invoke({"validate"}, "A L 1\nA S 1\n");
  CHECK(bad_input.code == 1);
  CHECK(bad_input.err.find("Requirement") != std::string::npos);

  CHECK(invoke({"parse", "(\\ 1"}).code == 1);
  CHECK(invoke({"frobnicate"}).code == 1);

  auto inactive = invoke({"step", "--relation", "b", "--at", "", "--balanced", "A L"},
                         "A A L L 2\nA S L 1\nS L 1\n");
  CHECK(inactive.code == 2);
  CHECK(inactive.err.find("InactiveRedex") != std::string::npos);

  CHECK(invoke({"step", "--relation", "beta", "--at", "S"}, kIdIdFile).code == 2);
}

TEST_CASE("dot") {
  auto r = invoke({"dot", "\\ 1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("digraph") == 0);
  CHECK(r.out.find("label=\"L\"") != std::string::npos);
  CHECK(r.out.find("label=\"1\"") != std::string::npos);
}

TEST_CASE("property: outputs re-validate and beta equals b then e") {
  testing::Rng rng(51);
  for (int i = 0; i < 100; ++i) {
    const PathSet t = paths_of(testing::random_term(rng, {3, 18, 0.7, true}));
    const std::string file = format_path_set(t);
    for (const auto& r : find_redexes(t)) {
      const std::string at = to_string(r.prefix);
      auto beta = invoke({"step", "--relation", "beta", "--at", at}, file);
      REQUIRE(beta.code == 0);
      CHECK(invoke({"validate"}, beta.out).code == 0);
      if (!is_active(t, DistantRedex{r.prefix, {}})) continue;
      auto b = invoke({"step", "--relation", "b", "--at", at}, file);
      REQUIRE(b.code == 0);
      CHECK(invoke({"validate"}, b.out).code == 0);
      auto e = invoke({"step", "--relation", "e", "--at", at}, b.out);
      CHECK(e.out == beta.out);
    }
  }
}
