#include "cobalt/matrix.hpp"

#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace cobalt;
using namespace cobalt::testing;

TEST_CASE("mat_mul basics") {
    RigMatrix I2 = RigMatrix::identity(2, Rig::natural);
    CHECK(mat_mul(I2, I2) == I2);

    RigMatrix a = RigMatrix::from_ints({{1, 1}, {0, 1}}, Rig::natural);
    RigMatrix b = RigMatrix::from_ints({{1, 0}, {1, 1}}, Rig::natural);
    CHECK(mat_mul(a, b) == RigMatrix::from_ints({{2, 1}, {1, 1}}, Rig::natural));

    CHECK_THROWS_AS(mat_mul(RigMatrix::identity(2, Rig::natural),
                            RigMatrix::identity(3, Rig::natural)),
                    shape_error);
    CHECK_THROWS_AS(mat_mul(RigMatrix::identity(2, Rig::natural),
                            RigMatrix::identity(2, Rig::integer)),
                    rig_error);
}

TEST_CASE("trace commutes under the product, against a direct-expansion oracle") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        RigMatrix a = random_matrix(rng, 3, 3);
        RigMatrix b = random_matrix(rng, 3, 3);
        CHECK(trace(mat_mul(a, b)) == trace(mat_mul(b, a)));
        // the library product agrees with the raw triple loop
        CHECK(mat_mul(a, b) == naive_mat_mul(a, b));
    }
}

TEST_CASE("kron identities and the exchange law") {
    CHECK(kron(RigMatrix::identity(2, Rig::natural), RigMatrix::identity(3, Rig::natural)) ==
          RigMatrix::identity(6, Rig::natural));

    RigMatrix x = RigMatrix::from_ints({{0, 1}, {1, 0}}, Rig::natural);
    RigMatrix s = RigMatrix::from_ints({{2}}, Rig::natural);
    CHECK(kron(x, s) == RigMatrix::from_ints({{0, 2}, {2, 0}}, Rig::natural));

    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 25; ++trial) {
        RigMatrix a = random_matrix(rng, 2, 2), b = random_matrix(rng, 2, 2);
        RigMatrix c = random_matrix(rng, 2, 2), d = random_matrix(rng, 2, 2);
        // (A (x) B)(C (x) D) = AC (x) BD, each side through independent loops
        RigMatrix lhs = naive_mat_mul(naive_kron(a, b), naive_kron(c, d));
        RigMatrix rhs = kron(mat_mul(a, c), mat_mul(b, d));
        CHECK(lhs == rhs);
        CHECK(kron(a, b) == naive_kron(a, b));
    }
}

TEST_CASE("kron is associative under the flat index convention") {
    std::mt19937_64 rng(9);
    RigMatrix a = random_matrix(rng, 2, 3), b = random_matrix(rng, 3, 2),
              c = random_matrix(rng, 2, 2);
    CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
}

TEST_CASE("swap_matrix is the flip permutation") {
    CHECK(swap_matrix(1, 5, Rig::natural) == RigMatrix::identity(5, Rig::natural));

    RigMatrix s22 = swap_matrix(2, 2, Rig::natural);
    CHECK(s22.at(0, 0).is_one());
    CHECK(s22.at(3, 3).is_one());
    CHECK(s22.at(2, 1).is_one());
    CHECK(s22.at(1, 2).is_one());

    for (std::size_t d1 = 1; d1 <= 4; ++d1)
        for (std::size_t d2 = 1; d2 <= 4; ++d2) {
            RigMatrix s = swap_matrix(d1, d2, Rig::integer);
            // permutation: one unit entry per row and column
            for (std::size_t i = 0; i < s.rows(); ++i) {
                int row_ones = 0, col_ones = 0;
                for (std::size_t j = 0; j < s.cols(); ++j) {
                    if (s.at(i, j).is_one()) ++row_ones;
                    if (s.at(j, i).is_one()) ++col_ones;
                }
                CHECK(row_ones == 1);
                CHECK(col_ones == 1);
            }
            CHECK(mat_mul(swap_matrix(d2, d1, Rig::integer), s) ==
                  RigMatrix::identity(d1 * d2, Rig::integer));
        }
}

TEST_CASE("dagger_matrix conjugates and transposes") {
    CHECK(dagger_matrix(RigMatrix::identity(3, Rig::rational)) ==
          RigMatrix::identity(3, Rig::rational));
    CHECK_THROWS_AS(dagger_matrix(RigMatrix::identity(2, Rig::natural)), rig_error);

    RigMatrix i_mat(1, 1, {RigValue::complex(BigRat(0), BigRat(1))});
    CHECK(dagger_matrix(i_mat) == RigMatrix(1, 1, {RigValue::complex(BigRat(0), BigRat(-1))}));

    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 20; ++trial) {
        RigMatrix a = RigMatrix::zero(3, 2, Rig::complex_rational);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                a.at(i, j) = RigValue::complex(BigRat(rand_int(rng, -5, 5)),
                                               BigRat(rand_int(rng, -5, 5)));
        CHECK(dagger_matrix(dagger_matrix(a)) == a);
    }
}

TEST_CASE("matrix product associativity, exact and float") {
    std::mt19937_64 rng(11);
    RigMatrix a = random_matrix(rng, 2, 3), b = random_matrix(rng, 3, 4),
              c = random_matrix(rng, 4, 2);
    CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));

    RigMatrix af = random_matrix(rng, 3, 3, Rig::float64), bf = random_matrix(rng, 3, 3, Rig::float64),
              cf = random_matrix(rng, 3, 3, Rig::float64);
    CHECK(mat_mul(mat_mul(af, bf), cf).approx_equal(mat_mul(af, mat_mul(bf, cf)), 1e-9));
}

TEST_CASE("mixed-variant matrices are rejected") {
    CHECK_THROWS_AS(RigMatrix(1, 2, {RigValue::natural(BigInt(1)), RigValue::integer(BigInt(1))}),
                    rig_error);
    CHECK_THROWS_AS(RigMatrix(2, 2, {RigValue::one(Rig::natural)}), shape_error);
}

TEST_CASE("exact inverse round-trips") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        RigMatrix m = random_invertible(rng, 3);
        RigMatrix inv;
        REQUIRE(try_inverse(m, inv));
        CHECK(mat_mul(m, inv) == RigMatrix::identity(3, Rig::rational));
    }
    RigMatrix sing = RigMatrix::from_ints({{1, 2}, {2, 4}}, Rig::rational);
    RigMatrix out;
    CHECK_FALSE(try_inverse(sing, out));
    // permutation matrices invert over the naturals
    RigMatrix p = swap_matrix(2, 2, Rig::natural);
    REQUIRE(try_inverse(p, out));
    CHECK(out.rig() == Rig::natural);
}
