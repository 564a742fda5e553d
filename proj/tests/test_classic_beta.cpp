#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pathlambda/classic_beta.hpp"
#include "pathlambda/name_bridge.hpp"
#include "pathlambda/syntax.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace pathlambda;

namespace {
const PathSet kFigureOne{"A L A A L L A 2", "A L A A L L S 2", "A L A S L 2", "A L S 1", "S L 1"};
const PathSet kIdId{"A L 1", "S L 1"};
}  // namespace

TEST_CASE("tau") {
  CHECK(tau({2, 3}, 2) == 2);
  CHECK(tau({0, 0}, 7) == 7);
  CHECK(tau({2, 3}, 5) == 8);
}

TEST_CASE("property: tau is strictly increasing and fixes 1..d") {
  for (std::uint32_t d = 0; d < 6; ++d)
    for (std::uint32_t h = 0; h < 6; ++h)
      for (std::uint32_t i = 1; i < 20; ++i) {
        CHECK(tau({d, h}, i) < tau({d, h}, i + 1));
        if (i <= d) CHECK(tau({d, h}, i) == i);
      }
}

TEST_CASE("find_redexes") {
  auto r = find_redexes(kFigureOne);
  REQUIRE(r.size() == 2);
  CHECK(r[0].prefix.empty());
  CHECK(r[1].prefix == parse_path("A L A"));
  CHECK(find_redexes(PathSet{"L 1"}).empty());
  auto id = find_redexes(kIdId);
  REQUIRE(id.size() == 1);
  CHECK(id[0].prefix.empty());
}

TEST_CASE("beta_step examples") {
  CHECK(beta_step(kIdId, {}) == PathSet{"L 1"});
  // λx.(λy.x)(λz.z): index above the pivot drops by one
  CHECK(beta_step(PathSet{"L A L 2", "L S L 1"}, {parse_path("L")}) == PathSet{"L 1"});
  // λx.(λy.λz.y)x: escaping argument label shifted by ||q||
  CHECK(beta_step(PathSet{"L A L L 2", "L S 1"}, {parse_path("L")}) == PathSet{"L L 2"});
}

TEST_CASE("beta_step errors") {
  CHECK_THROWS_WITH_AS(beta_step(kIdId, {parse_path("S")}), doctest::Contains("NotARedex"), Error);
  CHECK_THROWS_WITH_AS(beta_step(PathSet{"A L 2", "S L 1"}, {}), doctest::Contains("OpenTerm"),
                       Error);
}

TEST_CASE("normalize_beta") {
  auto id = normalize_beta(kIdId, 10);
  CHECK_FALSE(id.exhausted);
  CHECK(id.term == PathSet{"L 1"});

  using T = LambdaTree;
  auto omega_half = T::lam(T::app(T::var(1), T::var(1)));
  const PathSet omega = paths_of(T::app(omega_half, omega_half));
  CHECK(beta_step(omega, {}) == omega);
  auto diverge = normalize_beta(omega, 50);
  CHECK(diverge.exhausted);
  CHECK(diverge.steps == 50);

  auto fig = normalize_beta(kFigureOne, 50);
  REQUIRE_FALSE(fig.exhausted);
  auto oracle = testing::nc_normalize(
      parse_named("(\\x. (\\y. \\z. y y) (\\u. x) x) (\\v. v)"), 50);
  REQUIRE(oracle.has_value());
  CHECK(fig.term == paths_of(to_namefree(*oracle)));
  CHECK(fig.term == PathSet{"L 1"});
}

TEST_CASE("property: beta agrees with the named oracle and preserves bindings") {
  testing::Rng rng(2024);
  for (int i = 0; i < 300; ++i) {
    const LambdaTree t = testing::random_term(rng, {2, 30, 0.6, true});
    const PathSet paths = paths_of(t);
    const NamedTree named = to_namecarrying(t);
    const auto tracked = testing::IdentityTerm::from(t);
    for (const auto& r : find_redexes(paths)) {
      const PathSet reduced = beta_step(paths, r);
      CHECK(is_closed(reduced));
      CHECK(paths_of(validate_path_set(reduced)) == reduced);
      CHECK(reduced == paths_of(to_namefree(nc_beta_step(named, r.prefix))));
      auto by_identity = tracked.beta(r.prefix);
      REQUIRE(by_identity.has_value());
      CHECK(by_identity->paths() == reduced);
    }
  }
}
