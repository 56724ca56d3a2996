#include <doctest.h>

#include <random>

#include "intens/conform.hpp"
#include "intens/generator.hpp"
#include "intens/parse.hpp"
#include "intens/pretty.hpp"

using namespace intens;

namespace {

Language lang(const char* code) { return *language_from_code(code); }
Name n(const char* text) { return Name(text); }
Term t(const char* text) { return parse_term(text); }

Process proc(const char* text) { return parse_process_unchecked(text); }

}  // namespace

TEST_CASE("language order is componentwise") {
  CHECK(leq(lang("AMDO"), lang("SPCI")));
  CHECK(leq(lang("AMDI"), lang("AMDI")));
  CHECK_FALSE(leq(lang("SMDO"), lang("AMDI")));  // S > A
  CHECK_FALSE(leq(lang("AMDI"), lang("SPCN")));  // I > NM
  CHECK(leq(lang("AMDN"), lang("AMDI")));
  CHECK(all_languages().size() == 24);
}

TEST_CASE("language codes round-trip") {
  for (const Language& l : all_languages()) {
    auto back = language_from_code(code(l));
    REQUIRE(back.has_value());
    CHECK(*back == l);
  }
  CHECK_FALSE(language_from_code("XMDI").has_value());
  CHECK_FALSE(language_from_code("AMD").has_value());
}

TEST_CASE("conformance accepts and rejects per feature") {
  CHECK(conforms(parse_process("<a>", lang("AMDO")), lang("AMDO")));

  // Channel and continuation where the language admits neither.
  auto violations = conformance_violations(proc("'c<a>.0"), lang("AMDO"));
  CHECK(violations.size() == 2);

  // Compound pattern needs intensionality.
  violations = conformance_violations(proc("(x*y).0"), lang("AMDN"));
  CHECK(violations.size() == 1);

  // Monadic languages have arity-one tuples.
  violations = conformance_violations(proc("<a,b>"), lang("AMDO"));
  CHECK(violations.size() == 1);

  // Outside intensionality output data is names only.
  violations = conformance_violations(proc("<a*b>"), lang("AMDN"));
  CHECK(violations.size() == 1);
}

TEST_CASE("free names of processes") {
  CHECK(free_names(proc("(x).<x>")).empty());
  // The channel and the match subject stay free; the binder does not.
  CHECK(free_names(proc("a(=b,y).<y*b>")) == std::set<Name>{n("a"), n("b")});
  CHECK(free_names(proc("new a.<a>")).empty());
}

TEST_CASE("substitution on processes") {
  Substitution s{{n("x"), t("a")}};
  CHECK(apply_subst(s, proc("<x> | (z).0")) == proc("<a> | (z).0"));

  // Binding occurrences shadow.
  CHECK(apply_subst(s, proc("(x).<x>")) == proc("(x).<x>"));

  // Capture is avoided by renaming the restriction.
  const Process renamed = apply_subst(s, proc("new a.<x>"));
  REQUIRE(renamed.kind() == Process::Kind::restriction);
  CHECK(renamed.restricted_name() == n("#f0"));
  CHECK(pretty(renamed) == "new #f0.<a>");
}

TEST_CASE("swapping two names maps the swapped matcher back") {
  // The one-name-apart matcher pair: swapping m and the displaced name turns
  // one into the other.
  const Process s3 = wide_matcher(1);
  const Process s4 = wide_matcher_swapped(1, 1);
  Substitution swap{{n("m"), t("a1")}, {n("a1"), t("m")}};
  CHECK(apply_subst(swap, s4) == s3);
  CHECK(apply_subst(swap, s3) == s4);
}

TEST_CASE("alpha equivalence identifies bound renamings only") {
  CHECK(alpha_eq(proc("new a.<a>"), proc("new b.<b>")));
  CHECK(alpha_eq(proc("(x).<x>"), proc("(y).<y>")));
  CHECK_FALSE(alpha_eq(proc("<a>"), proc("<b>")));
  CHECK_FALSE(alpha_eq(proc("(=a).0"), proc("(=b).0")));
  // Free occurrence vs bound occurrence of the same spelling.
  CHECK_FALSE(alpha_eq(proc("new a.<b>"), proc("new b.<b>")));
}

TEST_CASE("alpha equivalence handles shadowing and pattern binders") {
  CHECK(alpha_eq(proc("(x).(x).<x>"), proc("(y).(x).<x>")));
  CHECK(alpha_eq(proc("(x*y).<x*y>"), proc("(u*v).<u*v>")));
  CHECK_FALSE(alpha_eq(proc("(x*y).<x>"), proc("(x*y).<y>")));
  // A binding does not capture a sibling match subject.
  CHECK(alpha_eq(proc("(x*=x).0"), proc("(y*=x).0")));
  CHECK_FALSE(alpha_eq(proc("(x*=x).0"), proc("(y*=y).0")));
}

TEST_CASE("substitution commutes with free names and respects alpha") {
  std::mt19937_64 rng(11);
  Substitution s{{n("a"), t("e")}, {n("b"), t("c*d")}};
  for (int i = 0; i < 200; ++i) {
    const Process p = random_process(lang("SMDI"), rng);
    const Process q = apply_subst(s, p);

    std::set<Name> expected;
    for (const Name& name : free_names(p)) {
      if (const Term* image = s.find(name)) {
        expected.merge(free_names(*image));
      } else {
        expected.insert(name);
      }
    }
    CHECK(free_names(q) == expected);
  }
}

TEST_CASE("alpha-equivalent inputs stay alpha-equivalent under substitution") {
  Substitution s{{n("a"), t("b*c")}};
  const Process p1 = proc("new d.(x).<x*a*d>");
  const Process p2 = proc("new e.(y).<y*a*e>");
  REQUIRE(alpha_eq(p1, p2));
  CHECK(alpha_eq(apply_subst(s, p1), apply_subst(s, p2)));
}

TEST_CASE("conformance is monotone along the order when slots agree") {
  // Raising arity or matching degree never invalidates a process; the
  // synchronism and medium coordinates are held fixed because they change
  // which slots must be present.
  std::mt19937_64 rng(23);
  for (const Language& l1 : all_languages()) {
    for (const Language& l2 : all_languages()) {
      if (!leq(l1, l2)) continue;
      if (l1.synchronism != l2.synchronism || l1.medium != l2.medium) continue;
      for (int i = 0; i < 20; ++i) {
        const Process p = random_process(l1, rng);
        REQUIRE(conforms(p, l1));
        CHECK(conforms(p, l2));
      }
    }
  }
}
