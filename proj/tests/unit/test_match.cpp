#include <doctest.h>

#include "intens/match.hpp"
#include "intens/parse.hpp"
#include "support/oracle.hpp"

using namespace intens;

namespace {

Term t(const char* text) { return parse_term(text); }
Pattern p(const char* text) { return parse_pattern(text); }
Name n(const char* text) { return Name(text); }

}  // namespace

TEST_CASE("match binds structure componentwise") {
  auto s = match_one(t("a*b"), p("x*y"));
  REQUIRE(s.has_value());
  CHECK(*s == Substitution{{n("x"), t("a")}, {n("y"), t("b")}});
}

TEST_CASE("a binding name takes the whole term") {
  auto s = match_one(t("a*b"), p("z"));
  REQUIRE(s.has_value());
  CHECK(*s == Substitution{{n("z"), t("a*b")}});
}

TEST_CASE("name-matches test without binding") {
  auto s = match_one(t("a*b"), p("=a*=b"));
  REQUIRE(s.has_value());
  CHECK(s->empty());
}

TEST_CASE("match undefined cases") {
  CHECK_FALSE(match_one(t("a"), p("x*y")).has_value());
  CHECK_FALSE(match_one(t("a*b"), p("=a*=c")).has_value());
  CHECK_FALSE(match_one(t("a*b"), p("=b")).has_value());
}

TEST_CASE("ill-formed patterns are rejected, not undefined") {
  const Pattern bad = Pattern::compound(Pattern::binding(n("x")),
                                        Pattern::binding(n("x")));
  CHECK_THROWS_AS(match_one(t("a*b"), bad), std::invalid_argument);
}

TEST_CASE("name-match totality: every term matches its own name-match") {
  for (const Term& term : testing::all_terms(3, {n("a"), n("b")})) {
    auto s = match_one(term, Pattern::name_match(term));
    REQUIRE(s.has_value());
    CHECK(s->empty());
  }
}

TEST_CASE("poly-match base and composite cases") {
  CHECK(poly_match({}, {}) == Substitution{});

  const std::vector<Term> ts{t("a"), t("b*c")};
  const std::vector<Pattern> ps{p("=a"), p("z")};
  auto s = poly_match(ts, ps);
  REQUIRE(s.has_value());
  CHECK(*s == Substitution{{n("z"), t("b*c")}});
}

TEST_CASE("poly-match is undefined on arity mismatch") {
  const std::vector<Term> ts{t("a")};
  const std::vector<Pattern> ps{p("x"), p("y")};
  CHECK_FALSE(poly_match(ts, ps).has_value());
}

TEST_CASE("binding overlap across the sequence is an error, not undefined") {
  const std::vector<Term> ts{t("a"), t("b")};
  const std::vector<Pattern> ps{p("x"), p("x")};
  CHECK_THROWS_AS(poly_match(ts, ps), std::invalid_argument);
}

TEST_CASE("match domain is exactly the binding names") {
  const std::vector<Name> alphabet{n("a"), n("b")};
  const auto terms = testing::all_terms(2, alphabet);
  const auto patterns = testing::all_patterns(2, {n("x"), n("y")}, alphabet);
  for (const Term& term : terms) {
    for (const Pattern& pattern : patterns) {
      auto s = match_one(term, pattern);
      if (!s) continue;
      CHECK(s->domain() == pattern_names(pattern).binding);
    }
  }
}

TEST_CASE("match soundness: the result instantiates the pattern to the term") {
  const std::vector<Name> alphabet{n("a"), n("b")};
  for (const Term& term : testing::all_terms(2, alphabet)) {
    for (const Pattern& pattern :
         testing::all_patterns(2, {n("x"), n("y")}, alphabet)) {
      auto s = match_one(term, pattern);
      if (!s) continue;
      auto image = testing::instantiate(pattern, *s);
      REQUIRE(image.has_value());
      CHECK(*image == term);
    }
  }
}

TEST_CASE("match agrees with the enumerate-and-check oracle (depth 2 sweep)") {
  const std::vector<Name> alphabet{n("a"), n("b")};
  for (const Term& term : testing::all_terms(2, alphabet)) {
    for (const Pattern& pattern :
         testing::all_patterns(2, {n("x"), n("y")}, alphabet)) {
      auto fast = match_one(term, pattern);
      auto slow = testing::oracle_match(term, pattern);
      REQUIRE(fast.has_value() == slow.has_value());
      if (fast) CHECK(*fast == *slow);
    }
  }
}
