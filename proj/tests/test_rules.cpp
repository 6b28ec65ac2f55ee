#include "cobalt/rules.hpp"

#include "cobalt/canonical.hpp"
#include "cobalt/enumerate.hpp"
#include "cobalt/parse.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace cobalt;

TEST_CASE("triangle rule rewrites the zig-zag to the identity") {
    Term tri = parse_term("(cup @ id(x)) ; (id(x) @ cap)");
    Term out = apply_relation(tri, "tri.zig.x.reduce", {}, Level::of(1));
    CHECK(out == Term::id({Letter::X}));
}

TEST_CASE("identity absorption") {
    Term t = parse_term("id(x@x*) ; cap*");
    CHECK(apply_relation(t, "id.elim.l", {}, Level::of(1)) == Term::cap(CupOrient::starred));
    Term u = parse_term("cup ; id(x@x*)");
    CHECK(apply_relation(u, "id.elim.r", {}, Level::of(1)) == Term::cup(CupOrient::plain));
}

TEST_CASE("exchange turns a tensor of composites into a composite of tensors") {
    Term t = parse_term("(cup ; cap*) @ (cup* ; cap)");
    Term out = apply_relation(t, "exchange.split", {}, Level::of(1));
    auto [d, c] = dom_cod(out);
    CHECK(d.empty());
    CHECK(c.empty());
    CHECK(out == parse_term("(cup @ cup*) ; (cap* @ cap)"));
    // and back
    CHECK(apply_relation(out, "exchange.join", {}, Level::of(1)) == t);
}

TEST_CASE("rules fail loudly at wrong positions") {
    Term t = parse_term("cup ; cap*");
    CHECK_THROWS_AS(apply_relation(t, "tri.zig.x.reduce", {}, Level::of(1)), rewrite_error);
    CHECK_THROWS_AS(apply_relation(t, "id.elim.l", {0, 0, 0}, Level::of(1)), rewrite_error);
    CHECK_THROWS_AS(apply_relation(t, "no.such.rule", {}, Level::of(1)), rewrite_error);
    // braid rules are gated by level
    Term b = parse_term("b(x,x) ; b-(x,x)");
    CHECK_THROWS_AS(apply_relation(b, "braid.cancel.pm", {}, Level::of(1)), rewrite_error);
    CHECK(apply_relation(b, "braid.cancel.pm", {}, Level::of(2)) ==
          Term::id({Letter::X, Letter::X}));
}

TEST_CASE("rule application at inner positions") {
    Term tri = parse_term("(cup @ id(x)) ; (id(x) @ cap)");
    Term t = Term::compose(Term::id({Letter::X}), tri);
    Term out = apply_relation(t, "tri.zig.x.reduce", {1}, Level::of(1));
    CHECK(out == Term::compose(Term::id({Letter::X}), Term::id({Letter::X})));
}

TEST_CASE("every rule application preserves the canonical form, k=1") {
    UniverseSpec spec;
    spec.k = 1;
    spec.max_size = 5;
    spec.max_id_len = 2;
    Level lv = Level::of(1);
    std::size_t applications = 0;
    for (const auto& e : enumerate_terms(spec)) {
        CanonicalForm before = canonical_form(e.term, lv);
        for (const auto& app : all_applications(e.term, lv)) {
            ++applications;
            CHECK(canonical_form(app.result, lv) == before);
        }
    }
    CHECK(applications > 1000);
}

TEST_CASE("every rule application preserves the canonical form, k=3") {
    UniverseSpec spec;
    spec.k = 3;
    spec.max_size = 3;
    spec.max_id_len = 2;
    Level lv = Level::of(3);
    for (const auto& e : enumerate_terms(spec)) {
        CanonicalForm before = canonical_form(e.term, lv);
        for (const auto& app : all_applications(e.term, lv))
            CHECK(canonical_form(app.result, lv) == before);
    }
}

TEST_CASE("twist rules convert cup orientations at k=3") {
    Term t = parse_term("cup ; b(x,x*)");
    CHECK(apply_relation(t, "twist.cup.x.reduce", {}, Level::of(3)) ==
          Term::cup(CupOrient::starred));
    CHECK_THROWS_AS(apply_relation(t, "twist.cup.x.reduce", {}, Level::of(2)), rewrite_error);
}

TEST_CASE("type preservation on every application in the universe") {
    UniverseSpec spec;
    spec.k = 3;
    spec.max_size = 5;
    spec.max_id_len = 1;
    Level lv = Level::of(3);
    for (const auto& e : enumerate_terms(spec)) {
        for (const auto& app : all_applications(e.term, lv)) {
            auto dc = typecheck(app.result, lv);
            CHECK(dc.first == e.dom);
            CHECK(dc.second == e.cod);
        }
    }
}
