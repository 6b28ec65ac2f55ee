#include "cobalt/rig.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace cobalt;

TEST_CASE("rig monoid laws hold on random triples") {
    std::mt19937_64 rng(12);
    auto rand_val = [&](Rig r) {
        long n = static_cast<long>(rng() % 19) - 9;
        if (r == Rig::natural) n = n < 0 ? -n : n;
        if (r == Rig::rational) return RigValue::rational(n, 1 + rng() % 4);
        if (r == Rig::complex_rational)
            return RigValue::complex(BigRat(n), BigRat(static_cast<long>(rng() % 7) - 3));
        return RigValue::of_int(n, r);
    };
    for (Rig r : {Rig::natural, Rig::integer, Rig::rational, Rig::complex_rational}) {
        for (int trial = 0; trial < 200; ++trial) {
            RigValue a = rand_val(r), b = rand_val(r), c = rand_val(r);
            CHECK(a.add(b) == b.add(a));
            CHECK(a.mul(b) == b.mul(a));
            CHECK(a.add(b).add(c) == a.add(b.add(c)));
            CHECK(a.mul(b).mul(c) == a.mul(b.mul(c)));
            CHECK(a.add(RigValue::zero(r)) == a);
            CHECK(a.mul(RigValue::one(r)) == a);
            // distributivity, exact
            CHECK(a.mul(b.add(c)) == a.mul(b).add(a.mul(c)));
        }
    }
}

TEST_CASE("naturals reject negation and involution") {
    RigValue n = RigValue::natural(BigInt(3));
    CHECK_THROWS_AS(n.neg(), rig_error);
    CHECK_THROWS_AS(n.conj(), rig_error);
    CHECK_THROWS_AS(RigValue::natural(BigInt(-1)), rig_error);
}

TEST_CASE("inverses and conjugation") {
    RigValue q = RigValue::rational(3, 4);
    CHECK(q.inverse().mul(q) == RigValue::one(Rig::rational));
    CHECK_THROWS_AS(RigValue::zero(Rig::rational).inverse(), rig_error);

    RigValue z = RigValue::complex(BigRat(1), BigRat(2));
    CHECK(z.mul(z.inverse()) == RigValue::one(Rig::complex_rational));
    CHECK(z.conj().conj() == z);
    CHECK(z.conj() == RigValue::complex(BigRat(1), BigRat(-2)));
    // conjugation is a ring involution
    RigValue w = RigValue::complex(BigRat(-2, 3), BigRat(5));
    CHECK(z.mul(w).conj() == z.conj().mul(w.conj()));
    CHECK(z.add(w).conj() == z.conj().add(w.conj()));
}

TEST_CASE("mixed-rig arithmetic is rejected") {
    CHECK_THROWS_AS(RigValue::natural(BigInt(1)).add(RigValue::integer(BigInt(1))), rig_error);
}

TEST_CASE("float comparisons use tolerance") {
    RigValue a = RigValue::f64(1.0);
    RigValue b = RigValue::f64(1.0 + 1e-12);
    CHECK(a.approx_equal(b));
    CHECK_FALSE(a.approx_equal(RigValue::f64(1.01)));
}
