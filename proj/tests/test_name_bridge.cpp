#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pathlambda/name_bridge.hpp"
#include "pathlambda/syntax.hpp"
#include "support/generators.hpp"

using namespace pathlambda;
using T = LambdaTree;

namespace {
const PathSet kFigureOne{"A L A A L L A 2", "A L A A L L S 2", "A L A S L 2", "A L S 1", "S L 1"};
const char* kFigureOneNamed = "(\\x. (\\y. \\z. y y) (\\u. x) x) (\\v. v)";
}  // namespace

TEST_CASE("to_namefree") {
  CHECK(to_namefree(parse_named("\\v. v")) == T::lam(T::var(1)));
  CHECK(paths_of(to_namefree(parse_named(kFigureOneNamed))) == kFigureOne);
  CHECK(to_namefree(parse_named("\\x. \\y. x")) == T::lam(T::lam(T::var(2))));
  CHECK_THROWS_WITH_AS(to_namefree(parse_named("\\x. y")), doctest::Contains("OpenTerm"), Error);
  CHECK_THROWS_WITH_AS(to_namefree(parse_named("\\x. \\x. x")),
                       doctest::Contains("DuplicateBinder"), Error);
}

TEST_CASE("to_namecarrying") {
  CHECK(to_string(to_namecarrying(T::lam(T::var(1)))) == "\\x1. x1");
  CHECK(alpha_eq(parse_named(kFigureOneNamed), to_namecarrying(validate_path_set(kFigureOne))));
  CHECK(to_string(to_namecarrying(T::lam(T::lam(T::var(2))))) == "\\x1. \\x2. x1");
  CHECK_THROWS_AS(to_namecarrying(T::lam(T::var(2))), Error);
}

TEST_CASE("skeleton") {
  CHECK(skeleton(T::var(3)).shape == ".");
  CHECK(skeleton(validate_path_set(kFigureOne)) == skeleton(parse_named(kFigureOneNamed)));
  CHECK(skeleton(T::lam(T::var(1))) == skeleton(parse_named("\\v. v")));
}

TEST_CASE("alpha_eq") {
  CHECK(alpha_eq(parse_named("\\x. x"), parse_named("\\y. y")));
  CHECK(alpha_eq(parse_named("\\x. \\y. x"), T::lam(T::lam(T::var(2)))));
  CHECK_FALSE(alpha_eq(parse_named("\\x. \\y. x"), parse_named("\\x. \\y. y")));
  CHECK(alpha_eq(parse_named("\\x. \\x. x"), parse_named("\\a. \\b. b")));
}

TEST_CASE("nc_beta_step") {
  CHECK(alpha_eq(nc_beta_step(parse_named("(\\x. x) (\\v. v)"), {}), parse_named("\\v. v")));
  CHECK(alpha_eq(nc_beta_step(parse_named("(\\x. \\y. x) (\\z. z)"), {}),
                 parse_named("\\y. \\z. z")));
  CHECK(alpha_eq(nc_beta_step(parse_named("(\\x. \\z. x) (\\v. v)"), {}),
                 parse_named("\\z. \\v. v")));
  CHECK_THROWS_WITH_AS(nc_beta_step(parse_named("\\x. x"), {}), doctest::Contains("NotARedex"),
                       Error);
}

TEST_CASE("nc_beta_step avoids capture") {
  // (\x. \y. x) y under a binder y: the inner y must be renamed.
  auto t = parse_named("\\y. (\\x. \\y. x) y");
  auto r = nc_beta_step(t, parse_path("L"));
  CHECK(alpha_eq(r, parse_named("\\a. \\b. a")));
  CHECK(to_namefree(r) == T::lam(T::lam(T::var(2))));
}

TEST_CASE("nc_beta_step restores distinct binders") {
  auto t = parse_named("(\\f. f f) (\\x. x)");
  auto r = nc_beta_step(t, {});
  CHECK_NOTHROW(to_namefree(r));
}

TEST_CASE("property: conversions are inverse modulo alpha") {
  testing::Rng rng(99);
  for (int i = 0; i < 500; ++i) {
    auto named = testing::random_named(rng, {2, 30, 0.5, true});
    auto nf = to_namefree(named);
    CHECK(alpha_eq(named, to_namecarrying(nf)));
    CHECK(alpha_eq(named, nf));
    CHECK(paths_of(to_namefree(to_namecarrying(nf))) == paths_of(nf));
    CHECK(skeleton(named) == skeleton(nf));
    // α-variants map to the same namefree tree
    CHECK(to_namefree(canonical_names(named)) == nf);
  }
}
