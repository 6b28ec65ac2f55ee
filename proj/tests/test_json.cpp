#include "cobalt/json_io.hpp"

#include "cobalt/parse.hpp"
#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace cobalt;
using namespace cobalt::testing;

TEST_CASE("matrix literals round trip across every rig") {
    std::mt19937_64 rng(61);
    for (Rig r : {Rig::natural, Rig::integer, Rig::rational, Rig::float64}) {
        RigMatrix m = random_matrix(rng, 3, 2, r);
        CHECK(matrix_from_json(matrix_to_json(m)) == m);
    }
    RigMatrix c = RigMatrix::zero(2, 2, Rig::complex_rational);
    c.at(0, 1) = RigValue::complex(BigRat(1, 2), BigRat(-3));
    CHECK(matrix_from_json(matrix_to_json(c)) == c);
}

TEST_CASE("rational strings parse") {
    CHECK(parse_rat("3/4") == BigRat(3, 4));
    CHECK(parse_rat("-7") == BigRat(-7));
    CHECK_THROWS_AS(parse_rat("1/0"), io_error);
    json j = json::parse(R"({"rig":"rational","rows":1,"cols":1,"entries":["-2/6"]})");
    CHECK(matrix_from_json(j).at(0, 0) == RigValue::rational(-1, 3));
}

TEST_CASE("frobenius and movie schemas round trip") {
    FrobeniusData fd = cyclic_group_algebra(2);
    FrobeniusData back = frobenius_from_json(frobenius_to_json(fd));
    CHECK(back.mult == fd.mult);
    CHECK(back.copairing == fd.copairing);

    Movie mv;
    mv.in_circles = 2;
    mv.slices = {{SliceOp::Merge, 0}, {SliceOp::Split, 0}, {SliceOp::Swap, 0}};
    Movie back_mv = movie_from_json(movie_to_json(mv));
    CHECK(back_mv.in_circles == 2);
    CHECK(back_mv.slices.size() == 3);
    CHECK(back_mv.slices[2].op == SliceOp::Swap);
    CHECK_THROWS_AS(movie_from_json(json::parse(R"({"in":1,"slices":[{"op":"bloom","pos":0}]})")),
                    io_error);
}

TEST_CASE("datum schema round trips and defaults mixed blocks") {
    EvalDatum ed = separating_datum_k2();
    json j = datum_to_json(ed);
    EvalDatum back = datum_from_json(j);
    CHECK(back.block(Letter::X, Letter::XStar) == ed.block(Letter::X, Letter::XStar));
    CHECK(validate_datum(back).valid());

    // omit the mixed blocks: they fall back to the primary one
    j.erase("braid_xs");
    j.erase("braid_sx");
    j.erase("braid_ss");
    EvalDatum defaulted = datum_from_json(j);
    CHECK(defaulted.block(Letter::XStar, Letter::XStar) == *defaulted.braid_xx);
}

TEST_CASE("monoid and category schemas") {
    FiniteMonoid m = FiniteMonoid::make({"e", "g"}, 0, {{0, 1}, {1, 0}});
    CHECK(monoid_from_json(monoid_to_json(m)).mul(1, 1) == 0);

    FiniteCategory c = FiniteCategory::from_monoid(m);
    FiniteCategory back = category_from_json(category_to_json(c));
    CHECK(back.morphisms.size() == 2);
    CHECK(back.compose(1, 1) == 0);
}

TEST_CASE("canonical forms serialize stably") {
    CanonicalForm cf = canonical_form(parse_term("cup ; cap*"), Level::of(1));
    json j = canonical_to_json(cf);
    CHECK(j.at("loops").at("cw") == 1);
    CHECK(j.at("matching").empty());

    CanonicalForm idx = canonical_form(parse_term("id(x)"), Level::of(1));
    json ji = canonical_to_json(idx);
    CHECK(ji.at("matching")[0][0] == "dom");
    CHECK(ji.at("matching")[0][4] == "fwd");

    // identical forms produce identical bytes
    CHECK(canonical_to_json(cf).dump() ==
          canonical_to_json(canonical_form(parse_term("cup ; cap*"), Level::of(1))).dump());
}

TEST_CASE("report serialization") {
    Report rep;
    rep.add("good", true);
    rep.add("bad", false, "entry (0,0)");
    json j = report_to_json(rep);
    CHECK(j.at("valid") == false);
    CHECK(j.at("items").size() == 2);
}
