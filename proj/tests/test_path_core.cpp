#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pathlambda/path_core.hpp"
#include "support/generators.hpp"

using namespace pathlambda;

namespace {

// (λ((λλ 2 2)λ2)1)λ1
LambdaTree figure_one() {
  using T = LambdaTree;
  auto inner = T::app(T::app(T::lam(T::lam(T::app(T::var(2), T::var(2)))), T::lam(T::var(2))),
                      T::var(1));
  return T::app(T::lam(inner), T::lam(T::var(1)));
}

const PathSet kFigureOne{"A L A A L L A 2", "A L A A L L S 2", "A L A S L 2", "A L S 1", "S L 1"};

ErrorCode rejection(std::vector<Path> candidate) {
  try {
    validate_path_set(std::move(candidate));
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("candidate was accepted");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("labels order as L < A < S < 1 < 2") {
  CHECK(Label::lam() < Label::app());
  CHECK(Label::app() < Label::arg());
  CHECK(Label::arg() < Label::num(1));
  CHECK(Label::num(1) < Label::num(2));
  CHECK(Label::num(7).value() == 7);
  CHECK_THROWS_AS(Label::num(0), Error);
}

TEST_CASE("paths_of") {
  CHECK(paths_of(LambdaTree::var(5)) == PathSet{"5"});
  CHECK(paths_of(figure_one()) == kFigureOne);
  using T = LambdaTree;
  CHECK(paths_of(T::app(T::lam(T::var(1)), T::lam(T::var(1)))) == PathSet{"A L 1", "S L 1"});
}

TEST_CASE("validate_path_set examples") {
  CHECK(validate_path_set(kFigureOne) == figure_one());
  CHECK(validate_path_set(PathSet{"5"}) == LambdaTree::var(5));
  CHECK(rejection({parse_path("A 1")}) == ErrorCode::Requirement2Violated);
}

TEST_CASE("validate_path_set error paths") {
  CHECK(rejection({}) == ErrorCode::EmptyInput);
  CHECK(rejection({parse_path("L 1"), parse_path("A 1")}) == ErrorCode::Requirement1Violated);
  CHECK(rejection({parse_path("S 1")}) == ErrorCode::Requirement2Violated);
  CHECK(rejection({parse_path("A 1"), parse_path("S 1"), parse_path("2")}) ==
        ErrorCode::Requirement2Violated);
  CHECK(rejection({parse_path("1"), parse_path("2")}) == ErrorCode::Requirement3Violated);
  CHECK(rejection({parse_path("L A")}) == ErrorCode::NotProperPath);
  CHECK(rejection({parse_path("L 1 L 1")}) == ErrorCode::NotProperPath);
  CHECK(rejection({Path{}}) == ErrorCode::NotProperPath);
}

TEST_CASE("validate_extended_path_set accepts inner labels") {
  auto t = validate_extended_path_set({parse_path("A L 1 L 1"), parse_path("S L 1")});
  using T = LambdaTree;
  CHECK(t == T::app(T::lam(T::inner(1, T::lam(T::var(1)))), T::lam(T::var(1))));
  CHECK_THROWS_AS(validate_extended_path_set({parse_path("1 L 1"), parse_path("1")}), Error);
  CHECK_THROWS_AS(validate_path_set({parse_path("A L 1 L 1"), parse_path("S L 1")}), Error);
}

TEST_CASE("lengths") {
  CHECK(l_length(parse_path("A L A A L L A 2")) == 3);
  CHECK(l_length(Path{}) == 0);
  CHECK(l_length(parse_path("L L L")) == 3);
  CHECK(length(parse_path("A L A A L L A 2")) == 8);
}

TEST_CASE("binder_position") {
  CHECK(binder_position(kFigureOne, parse_path("S L 1")) == 1u);
  CHECK(binder_position(kFigureOne, parse_path("A L A A L L S 2")) == 4u);
  CHECK_FALSE(binder_position(PathSet{"2"}, parse_path("2")).has_value());
  CHECK_THROWS_AS(binder_position(kFigureOne, parse_path("L 1")), Error);
}

TEST_CASE("is_closed") {
  CHECK(is_closed(kFigureOne));
  CHECK_FALSE(is_closed(LambdaTree::var(1)));
  CHECK(is_closed(LambdaTree::lam(LambdaTree::var(1))));
}

TEST_CASE("grafted_tree") {
  CHECK(grafted_tree(kFigureOne, parse_path("S")) == PathSet{"L 1"});
  CHECK(grafted_tree(kFigureOne, Path{}) == kFigureOne);
  CHECK(grafted_tree(kFigureOne, parse_path("A L A S")) == PathSet{"L 2"});
  CHECK_THROWS_AS(grafted_tree(kFigureOne, parse_path("S S")), Error);
  CHECK_THROWS_AS(grafted_tree(kFigureOne, parse_path("S L 1")), Error);
}

TEST_CASE("path text format") {
  auto paths = parse_path_file("# figure one\nA L S 1\n\nS L 1   # argument\n");
  CHECK(paths.size() == 2);
  CHECK(format_path_set(PathSet(paths)) == "A L S 1\nS L 1\n");
  CHECK_THROWS_AS(parse_path_file("A L x\n"), Error);
  CHECK_THROWS_AS(parse_path_file("A L\n"), Error);
  CHECK_THROWS_AS(parse_path_file("a L 1\n"), Error);
}

TEST_CASE("property: round trip, prefix freeness, unique L-block") {
  testing::Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    const bool closed = i % 2 == 0;
    auto t = testing::random_term(rng, {1, 30, 0.5, closed});
    const PathSet paths = paths_of(t);
    CHECK(validate_path_set(paths) == t);
    for (std::size_t a = 0; a < paths.size(); ++a)
      for (std::size_t b = 0; b < paths.size(); ++b)
        if (a != b) CHECK_FALSE(starts_with(paths.paths()[b], paths.paths()[a]));
    for (const auto& p : paths) {
      std::size_t matches = 0;
      for (std::size_t j = 0; j + 1 < p.size(); ++j)
        if (p[j] == Label::lam() && l_length(PathView(p).subspan(j + 1, p.size() - j - 2)) + 1 ==
                                        p.back().value())
          ++matches;
      CHECK(matches <= 1);
      CHECK((matches == 1) == binder_index(p).has_value());
    }
    if (closed) CHECK(is_closed(paths));
  }
}

TEST_CASE("property: mutations are rejected or change the tree") {
  testing::Rng rng(11);
  const Label alphabet[] = {Label::lam(), Label::app(), Label::arg(), Label::num(1),
                            Label::num(2), Label::num(3)};
  for (int i = 0; i < 500; ++i) {
    auto t = testing::random_term(rng, {2, 25, 0.5, true});
    std::vector<Path> mutated = paths_of(t).paths();
    auto& victim = mutated[std::uniform_int_distribution<std::size_t>(0, mutated.size() - 1)(rng)];
    if (i % 4 == 0 && mutated.size() > 1) {
      mutated.erase(mutated.begin() +
                    static_cast<std::ptrdiff_t>(&victim - mutated.data()));
    } else {
      auto& label = victim[std::uniform_int_distribution<std::size_t>(0, victim.size() - 1)(rng)];
      Label replacement = label;
      while (replacement == label)
        replacement = alphabet[std::uniform_int_distribution<std::size_t>(0, 5)(rng)];
      label = replacement;
    }
    try {
      auto rebuilt = validate_path_set(mutated);
      CHECK(paths_of(rebuilt) == PathSet(mutated));
      CHECK_FALSE(rebuilt == t);
    } catch (const Error&) {
    }
  }
}
