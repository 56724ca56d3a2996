#include <doctest.h>

#include "intens/canonical.hpp"
#include "intens/parse.hpp"
#include "intens/pretty.hpp"

using namespace intens;

namespace {

Process proc(const char* text) { return parse_process_unchecked(text); }

CanonicalForm canon(const char* text) { return canonicalize(proc(text)); }

}  // namespace

TEST_CASE("nil is a unit of parallel") {
  const CanonicalForm c = canon("0 | <a>");
  CHECK(c.restricted.empty());
  REQUIRE(c.threads.size() == 1);
  CHECK(c.key == "<a>");
  CHECK(struct_eq(proc("0 | <a>"), proc("<a>")));
}

TEST_CASE("restriction order does not matter") {
  CHECK(struct_eq(proc("new a.new b.<c>"), proc("new b.new a.<c>")));
  // Unused restrictions vanish entirely.
  CHECK(canon("new a.new b.<c>").key == "<c>");
}

TEST_CASE("conditionals resolve at top level") {
  CHECK(struct_eq(proc("if a = a then <a> else <b>"), proc("<a>")));
  CHECK(struct_eq(proc("if a = b then <a> else <b>"), proc("<b>")));
  CHECK(struct_eq(proc("if a*b = a*b then ok"), proc("ok")));
  // ... recursively through the chosen branch.
  CHECK(struct_eq(proc("if a = a then (if b = c then <a> else <b>)"), proc("<b>")));
}

TEST_CASE("conditionals under an input prefix stay put") {
  const CanonicalForm c = canon("(x).if x = a then ok");
  REQUIRE(c.threads.size() == 1);
  CHECK(c.key == "(#b0).if #b0 = a then ok");
  CHECK_FALSE(struct_eq(proc("(x).if x = a then ok"), proc("(x).0")));
  CHECK_FALSE(struct_eq(proc("(x).if x = a then ok"), proc("(x).ok")));
}

TEST_CASE("parallel is a commutative multiset") {
  CHECK(struct_eq(proc("<a> | <b>"), proc("<b> | <a>")));
  CHECK(struct_eq(proc("(<a> | <b>) | <c>"), proc("<a> | (<b> | <c>)")));
  // Multiset, not set: multiplicity matters.
  CHECK_FALSE(struct_eq(proc("<a> | <a>"), proc("<a>")));
}

TEST_CASE("scope extrusion is maximal") {
  CHECK(struct_eq(proc("new a.(<b> | <a>)"), proc("<b> | new a.<a>")));
  CHECK(struct_eq(proc("new a.(<a> | new b.<b*a>)"), proc("new b.new a.(<a> | <b*a>)")));
}

TEST_CASE("alpha variants share a canonical form") {
  CHECK(struct_eq(proc("new a.<a>"), proc("new b.<b>")));
  CHECK(struct_eq(proc("(x).<x>"), proc("(y).<y>")));
  CHECK(canon("new a.<a>").key == "new #n0.<#n0>");
  CHECK(canon("(x*y).<y*x>").key == "(#b0*#b1).<#b1*#b0>");
}

TEST_CASE("symmetric restricted names get a stable numbering") {
  // The compound thread distinguishes the two names; both syntactic orders
  // must land on the same form.
  const CanonicalForm c1 = canon("new a.new b.(<a> | <b> | <a*b>)");
  const CanonicalForm c2 = canon("new b.new a.(<b> | <a> | <b*a>)");
  CHECK(c1.key == c2.key);
}

TEST_CASE("replication is not unfolded by struct_eq") {
  CHECK_FALSE(struct_eq(proc("!<a>"), proc("<a> | !<a>")));
  CHECK(struct_eq(proc("!<a>"), proc("!<a> | 0")));
}

TEST_CASE("canonical forms rebuild to their own key") {
  for (const char* text :
       {"<a> | (x).ok", "new a.(<a> | a(x).0)", "!((x).<x>) | <a>",
        "(x*y).(ok | <x>) | <a*b>", "if a = b then <a> | <c>"}) {
    const CanonicalForm c = canon(text);
    CHECK(pretty(to_process(c)) == c.key);
    CHECK(canonicalize(to_process(c)).key == c.key);
  }
}

TEST_CASE("struct_eq is sound on unequal processes") {
  CHECK_FALSE(struct_eq(proc("<a>"), proc("<b>")));
  CHECK_FALSE(struct_eq(proc("<a> | <b>"), proc("<a*b>")));
  CHECK_FALSE(struct_eq(proc("new a.<a>"), proc("<a>")));
  CHECK_FALSE(struct_eq(proc("(=a).0"), proc("(=b).0")));
}
