#include "cobalt/canonical.hpp"

#include "cobalt/parse.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace cobalt;

namespace {
CanonicalForm cf1(const std::string& text) {
    return canonical_form(parse_term(text), Level::of(1));
}
CanonicalForm cf3(const std::string& text) {
    return canonical_form(parse_term(text), Level::of(3));
}
}  // namespace

TEST_CASE("triangles straighten to identities at k=1") {
    CHECK(cf1("(cup @ id(x)) ; (id(x) @ cap)") == cf1("id(x)"));
    CHECK(cf1("(id(x*) @ cup) ; (cap @ id(x*))") == cf1("id(x*)"));
    CHECK(cf1("(cup* @ id(x*)) ; (id(x*) @ cap*)") == cf1("id(x*)"));
    CHECK(cf1("(id(x) @ cup*) ; (cap* @ id(x))") == cf1("id(x)"));
}

TEST_CASE("closed loops carry their orientation at k=1") {
    CanonicalForm cw = cf1("cup ; cap*");
    CHECK(cw.matching.empty());
    CHECK(cw.cw == 1);
    CHECK(cw.ccw == 0);

    CanonicalForm ccw = cf1("cup* ; cap");
    CHECK(ccw.cw == 0);
    CHECK(ccw.ccw == 1);

    CHECK(cw != ccw);
    CHECK(cw != cf1("id(1)"));
}

TEST_CASE("loop orientations merge at k=3") {
    CanonicalForm a = cf3("cup ; cap*");
    CanonicalForm b = cf3("cup* ; cap");
    CHECK(a == b);
    CHECK(a.loops_merged);
    CHECK(a.any == 1);

    CanonicalOptions keep;
    keep.merge_loops_at_k3 = false;
    CHECK(canonical_form(parse_term("cup ; cap*"), Level::of(3), keep) !=
          canonical_form(parse_term("cup* ; cap"), Level::of(3), keep));
}

TEST_CASE("braids cancel at k=3") {
    CHECK(cf3("b(x,x) ; b-(x,x)") == cf3("id(x@x)"));
    CHECK(cf3("b(x,x*) ; b-(x,x*)") == cf3("id(x@x*)"));
    // the symmetric relation identifies the two crossings
    CHECK(cf3("b(x,x)") == cf3("b-(x,x)"));
}

TEST_CASE("scalars slide: loops are position-blind") {
    CHECK(cf1("(cup ; cap*) @ id(x)") == cf1("id(x) @ (cup ; cap*)"));
    CHECK(cf1("(cup* ; cap) @ cup") == cf1("cup @ (cup* ; cap)"));
}

TEST_CASE("endomorphisms of the unit commute") {
    CHECK(cf1("(cup ; cap*) ; (cup* ; cap)") == cf1("(cup* ; cap) ; (cup ; cap*)"));
}

TEST_CASE("canonical form rejects the undecidable levels") {
    CHECK_THROWS_AS(canonical_form(Term::id({Letter::X}), Level::of(0)), canonical_error);
    CHECK_THROWS_AS(canonical_form(Term::id({Letter::X}), Level::of(2)), canonical_error);
}

TEST_CASE("through strands record flow direction") {
    CanonicalForm idx = cf1("id(x)");
    REQUIRE(idx.matching.size() == 1);
    CHECK(idx.matching[0].fwd);  // upward through the x strand

    CanonicalForm idxs = cf1("id(x*)");
    REQUIRE(idxs.matching.size() == 1);
    CHECK_FALSE(idxs.matching[0].fwd);  // the dual strand flows down

    CanonicalForm cup = cf1("cup");
    REQUIRE(cup.matching.size() == 1);
    CHECK(cup.matching[0].a.side == 1);
    CHECK(cup.matching[0].b.side == 1);
}

TEST_CASE("cup and cup* differ as forms") {
    CHECK(cf1("cup") != cf1("cup*"));
    CHECK(cf1("cap") != cf1("cap*"));
}

TEST_CASE("nested loop equals side-by-side loops") {
    // a loop drawn inside another one is the same multiset of scalars
    CanonicalForm nested = cf1("cup ; (id(x) @ (cup ; cap*) @ id(x*)) ; cap*");
    CanonicalForm side = cf1("(cup ; cap*) @ (cup ; cap*)");
    CHECK(nested == side);
    CHECK(nested.cw == 2);
}

TEST_CASE("a corkscrew strand straightens") {
    // zig-zag built from the opposite pair straightens too
    CHECK(cf1("(cup @ id(x)) ; (id(x) @ cap)") ==
          cf1("((cup @ id(x)) ; (id(x) @ cap)) ; ((id(x) @ cup*) ; (cap* @ id(x)))"));
}

TEST_CASE("n=0 words normalize by level") {
    CHECK(normalize_c0(parse_c0_word("x x* x"), Level::of(2)).n == 2);
    CHECK(normalize_c0(parse_c0_word("x x* x"), Level::of(2)).m == 1);
    // free with involution at k=1: order is kept
    CHECK(normalize_c0(parse_c0_word("x x*"), Level::of(1)) !=
          normalize_c0(parse_c0_word("x* x"), Level::of(1)));
    // double stars cancel letterwise
    CHECK(normalize_c0(parse_c0_word("x**"), Level::of(0)).word == ObjectWord{Letter::X});
    CHECK_THROWS_AS(normalize_c0(parse_c0_word("x x"), Level::of(0)), level_error);
    // k >= 2 collapses to exponent pairs regardless of order
    CHECK(normalize_c0(parse_c0_word("x x* x"), Level::of(3)) ==
          normalize_c0(parse_c0_word("x x x*"), Level::of(3)));
}
